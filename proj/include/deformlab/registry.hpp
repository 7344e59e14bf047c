#pragma once

#include <string>
#include <vector>

#include "deformlab/algebra.hpp"

namespace deformlab {

struct RegistryEntry {
  std::string id;
  std::string description;
  Algebra algebra;
};

/// Built-in unital example algebras (dimensions 2 to 4), used by the census,
/// the CLI and the test suites.
const std::vector<RegistryEntry>& registry();

const Algebra& registry_algebra(const std::string& id);

/// A0 of dimension 2: unity e0, e1*e1 = 0 (isomorphic to K[x]/(x^2)).
Algebra algebra_a0();

/// A1 of dimension 2: unity e0, e1*e1 = e1 (isomorphic to K x K).
Algebra algebra_a1();

/// K[x]/(x^3) on the basis (1, x, x^2).
Algebra algebra_kx3();

/// Upper triangular 2x2 matrices on the basis (1, E11, E12).
Algebra algebra_t2();

/// K x K x K on the basis (1, u, v) with u, v orthogonal idempotents.
Algebra algebra_k3();

/// Full 2x2 matrix algebra on the basis (1, h, e, f) with h = E11 - E22.
Algebra algebra_m2();

/// 4-dimensional family <1, x, y, xy> with x^2 = y^2 = 0 and yx = t0 * xy
/// (a truncated quantum plane); associative for every parameter value.
Algebra quantum_plane_family(const Rational& t0);

}  // namespace deformlab
