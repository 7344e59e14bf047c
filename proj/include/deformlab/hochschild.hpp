#pragma once

#include <optional>
#include <vector>

#include "deformlab/algebra.hpp"

namespace deformlab {

// Hochschild cochain complex of an algebra with coefficients in itself.
//
// The differential is the standard one,
//   (d phi)(x_1..x_{d+1}) = mu(x_1, phi(x_2..x_{d+1}))
//                         + sum_{i=1..d} (-1)^i phi(x_1.., mu(x_i, x_{i+1}), ..x_{d+1})
//                         + (-1)^{d+1} mu(phi(x_1..x_d), x_{d+1}),
// and the sign convention tying it to the Gerstenhaber bracket is
//   coboundary(phi) = (-1)^{deg(phi) - 1} [mu, phi]_G,
// pinned by a unit test. Degree-0 cochains are elements of the algebra, so
// B^1 is the space of inner derivations.

struct CohomologySpace {
  int degree = 0;
  Index dim_z = 0;
  Index dim_b = 0;
  Index dim_h = 0;
  std::vector<Cochain> representatives;  // cocycles completing B^d to Z^d
};

struct SqClass {
  Cochain square;                  // phi o phi, a 3-cocycle
  bool coboundary = false;         // whether it lies in B^3
  std::optional<Cochain> witness;  // f with coboundary(f) = phi o phi
};

Cochain coboundary(const Algebra& alg, const Cochain& phi);

/// Gerstenhaber composition; for two 2-cochains,
/// (phi o psi)(x,y,z) = phi(psi(x,y),z) - phi(x,psi(y,z)).
Cochain circle_product(const Cochain& phi, const Cochain& psi);

/// [phi,psi]_G = phi o psi - (-1)^{(e-1)(d-1)} psi o phi.
Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi);

RatVector cochain_to_vec(const Cochain& phi);
Cochain vec_to_cochain(const RatVector& v, int degree, Index dim);

/// Matrix of the differential C^d -> C^{d+1} on flattened cochains (d >= 0).
RatMatrix delta_matrix(const Algebra& alg, int degree);

/// Exact (dim Z^d, dim B^d) without representatives.
std::pair<Index, Index> cohomology_dims(const Algebra& alg, int degree);

CohomologySpace cohomology(const Algebra& alg, int degree);

/// Some f with coboundary(f) = phi, if one exists. Requires phi to be a
/// cocycle (NotACocycle otherwise).
std::optional<Cochain> is_coboundary(const Algebra& alg, const Cochain& phi);

/// The square phi o phi of a 2-cocycle together with its H^3 status.
SqClass sq_class(const Algebra& alg, const Cochain& phi);

}  // namespace deformlab
