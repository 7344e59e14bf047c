#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "deformlab/algebra.hpp"
#include "deformlab/hochschild.hpp"

namespace deformlab {

/// Truncated formal deformation mu_t = mu_0 + t mu_1 + ... + t^m mu_m.
struct FormalDeformation {
  Algebra base;
  std::vector<Cochain> terms;  // mu_1..mu_m

  int order() const { return static_cast<int>(terms.size()); }

  /// mu_k, with mu_0 the base multiplication and zero beyond the order.
  Cochain term(int k) const {
    if (k == 0) return base.multiplication();
    if (k <= order()) return terms[static_cast<std::size_t>(k - 1)];
    return Cochain::zero(2, base.dim);
  }
};

/// Truncated formal isomorphism F_t = Id + t f_1 + ... + t^m f_m.
struct FormalIsomorphism {
  Index dim = 0;
  std::vector<RatMatrix> terms;  // f_1..f_m

  int order() const { return static_cast<int>(terms.size()); }

  RatMatrix term(int k) const {
    if (k == 0) return RatMatrix::Identity(dim, dim);
    if (k <= order()) return terms[static_cast<std::size_t>(k - 1)];
    return RatMatrix::Constant(dim, dim, Rational(0));
  }
};

struct OrderCheck {
  int order = 0;
  bool circle_ok = false;  // sum_{i} mu_i o mu_{k-i} = 0
  bool direct_ok = false;  // t^k coefficient of the expanded associator = 0
};

struct DeformationCheck {
  std::vector<OrderCheck> orders;
  bool all_ok = false;
};

/// Checks the deformation equation order by order, through the deformation's
/// own order by default. Each order is computed along two routes (the circle
/// sums and direct expansion of associativity over polynomial coefficients);
/// the routes are required to agree.
DeformationCheck check_deformation_equation(const FormalDeformation& def, int through_order = -1);

/// First nonzero mu_p (p >= 1). When the deformation equation holds through
/// order p the returned cochain is verified to be a 2-cocycle.
std::pair<int, Cochain> infinitesimal(const FormalDeformation& def);

struct Obstruction {
  Cochain omega;                      // sum_{i=1}^{m-1} mu_i o mu_{m-i}, a 3-cocycle
  bool solvable = false;              // whether omega lies in B^3
  std::optional<Cochain> particular;  // one mu_m with coboundary(mu_m) = omega
  std::vector<Cochain> kernel;        // basis of Z^2: the full solution set is affine
};

/// Obstruction to extending the order-(m-1) prefix of def to order m.
/// Fails with PrefixInvalid when the prefix does not satisfy the equation.
Obstruction obstruction(const FormalDeformation& def, int m);

struct ExtendFailure {
  int order = 0;
  Cochain omega;  // the non-coboundary obstruction class
};

/// Greedy order-by-order extension; the result is re-verified through
/// target_order by direct expansion.
std::variant<FormalDeformation, ExtendFailure> extend(const FormalDeformation& def, int target_order);

/// Conjugation mu_t -> F_t^{-1} mu_t(F_t x, F_t y) as truncated series.
FormalDeformation apply_isomorphism(const FormalIsomorphism& iso, const FormalDeformation& def,
                                    int result_order = -1);

/// Composition (F o G)_t = F_t o G_t; applying F then G to a deformation
/// equals applying F o G once.
FormalIsomorphism compose_isomorphisms(const FormalIsomorphism& f, const FormalIsomorphism& g, int order);

/// Truncated series inverse: F_t o inverse(F_t) = Id through the order.
FormalIsomorphism inverse_isomorphism(const FormalIsomorphism& iso, int order);

struct TrivializeObstruction {
  int order = 0;
  Cochain residual;  // normalized first term, a 2-cocycle not in B^2
};

struct TrivializeResult {
  std::optional<FormalIsomorphism> iso;
  std::optional<TrivializeObstruction> obstruction;
};

/// Order-by-order attempt to transform def into the trivial deformation.
/// Returns either an isomorphism that works through max_order, or the first
/// residual class that is not a coboundary.
TrivializeResult trivialize(const FormalDeformation& def, int max_order);

/// Base K + H^2(A,A)^dual of the universal infinitesimal deformation, with
/// (a1, h1) * (a2, h2) = (a1 a2, a1 h2 + a2 h1): as a ring this is the null
/// algebra of dimension 1 + dim H^2; the maximal ideal squares to zero.
struct InfinitesimalBase {
  Algebra algebra;                      // the algebra being deformed
  std::vector<Cochain> representatives; // chosen H^2 representatives

  Index dim_h2() const { return static_cast<Index>(representatives.size()); }
  Algebra base_ring() const { return null_algebra<Rational>(1 + dim_h2()); }
};

InfinitesimalBase universal_infinitesimal(const Algebra& alg);

/// Push-out along h_i^dual -> c_i t into K[t]/(t^2): the order-1 deformation
/// with infinitesimal sum_i c_i phi_i.
FormalDeformation push_out_infinitesimal(const InfinitesimalBase& base, const std::vector<Rational>& coeffs);

/// Necessary condition for two deformation directions to lie on a common
/// irreducible component: true iff [F,H]_G is a coboundary.
bool compatible_classes(const Algebra& alg, const Cochain& f, const Cochain& h);

}  // namespace deformlab
