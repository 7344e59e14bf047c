#pragma once

#include <optional>
#include <vector>

#include "deformlab/algebra.hpp"
#include "deformlab/polynomial.hpp"

namespace deformlab {

/// Matrix over K[t]; invertible for all but finitely many t when the
/// determinant polynomial is nonzero.
using ParamMatrix = MatrixX<Poly>;

/// Structure tensor over the rational function field K(t), as produced by
/// conjugating a constant algebra with a parametric basis change.
using ParamAlgebra = AlgebraT<RationalFn>;

/// Exact determinant over K[t] (fraction-free Bareiss elimination).
Poly param_determinant(const ParamMatrix& m);

/// Adjugate over K[t]; param_adjugate(m) * m = det(m) * Id.
ParamMatrix param_adjugate(const ParamMatrix& m);

ParamMatrix constant_param_matrix(const RatMatrix& m);

/// The family phi + t * Id.
ParamMatrix phi_plus_t_identity(const RatMatrix& phi);

/// mu_t = f_t^{-1} o mu o (f_t x f_t) over K(t), entries reduced after every
/// operation so pole orders are exact. Fails with IdenticallySingular when
/// det f_t = 0 as a polynomial.
ParamAlgebra conjugate_family(const ParamMatrix& f, const Algebra& alg);

/// Entrywise specialization at t = t0; fails if any entry has a pole there.
Algebra evaluate_family(const ParamAlgebra& family, const Rational& t0);

struct PoleEntry {
  Index i = 0, j = 0, k = 0;
  int order = 0;
};

struct LimitResult {
  std::optional<Algebra> algebra;  // engaged iff there are no poles
  std::vector<PoleEntry> poles;
};

/// Limit of the family at t = 0: defined iff every entry has nonnegative
/// valuation, otherwise the poles are reported with their orders.
LimitResult limit_at_zero(const ParamAlgebra& family);

/// Fitting decomposition V = V_R + V_N of a linear map: invertible on V_R,
/// nilpotent of index q on V_N (q = 0 when V_N is trivial).
struct FittingData {
  RatMatrix basis_r;  // n x r, basis of V_R = im(phi^q)
  RatMatrix basis_n;  // n x (n - r), basis of V_N = ker(phi^q)
  int q = 0;
  RatMatrix phi_on_r;  // phi restricted to V_R in basis_r coordinates
  RatMatrix phi_on_n;  // phi restricted to V_N in basis_n coordinates
};

FittingData fitting(const RatMatrix& phi);

struct PhiDegeneration {
  std::optional<Algebra> algebra;
  std::optional<Cochain> residual;  // nonzero condition tensor on failure
};

/// Closed-form limit of (phi + t Id) . mu at t = 0. The limit exists iff
///   phi^2 o mu_N - phi o mu_N o (phi x id) - phi o mu_N o (id x phi)
///     + mu_N o (phi x phi) = 0
/// and is then
///   mu_0 = phi^{-1} o mu_R o (phi x phi) + mu_N o (phi x id)
///        + mu_N o (id x phi) - phi o mu_N,
/// with phi^{-1} the inverse of phi on V_R applied to the V_R component.
/// Agrees entrywise with limit_at_zero(conjugate_family(phi + t Id, alg)).
/// For invertible phi the limit degenerates to the plain basis change.
PhiDegeneration phi_degeneration(const RatMatrix& phi, const Algebra& alg);

}  // namespace deformlab
