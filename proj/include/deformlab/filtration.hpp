#pragma once

#include <vector>

#include "deformlab/algebra.hpp"

namespace deformlab {

/// Increasing chain of subspaces A_0 c A_1 c ... c A_r = V, each given by a
/// matrix whose columns span the step. Steps must strictly increase and the
/// last one must span V; multiplicativity mu(A_p, A_q) c A_{p+q} (with
/// A_s = V for s >= r) is checked by the operations that need it.
struct Filtration {
  std::vector<RatMatrix> steps;
};

/// Basis adapted to the filtration together with the level of each vector.
/// Columns are chosen by pivoting the step bases in input order.
struct AdaptedBasis {
  RatMatrix basis;          // n x n, invertible
  std::vector<int> levels;  // level of each column
};

AdaptedBasis adapted_basis(const Algebra& alg, const Filtration& filt);

/// Associated graded algebra gr(A) in the adapted basis.
Algebra graded_algebra(const Algebra& alg, const Filtration& filt);

/// Fiber of the Rees algebra at t = lambda, in the adapted basis:
/// entries gamma[(a,b) -> c] * lambda^(level(a) + level(b) - level(c)).
/// The fiber at 0 is graded_algebra; the fiber at 1 is the input algebra
/// written in the adapted basis, and all nonzero fibers are isomorphic to it
/// through the diagonal rescaling diag(lambda^level).
Algebra rees_fiber(const Algebra& alg, const Filtration& filt, const Rational& lambda);

}  // namespace deformlab
