#include "deformlab/deformation.hpp"

#include <stdexcept>
#include <string>

#include "deformlab/polynomial.hpp"

namespace deformlab {

namespace {

/// mu_t as an algebra over polynomial scalars, truncated at the given order.
AlgebraT<Poly> polynomial_family(const FormalDeformation& def, int order) {
  const Index n = def.base.dim;
  AlgebraT<Poly> fam = make_algebra<Poly>(n);
  for (int k = 0; k <= order; ++k) {
    const Cochain mu = def.term(k);
    std::vector<Rational> mono(static_cast<std::size_t>(k) + 1);
    mono.back() = Rational(1);
    const Poly tk{std::vector<Rational>(mono)};
    for (Index r = 0; r < n * n; ++r)
      for (Index s = 0; s < n; ++s)
        if (!mu.coeff(r, s).is_zero()) fam.structure(r, s) += mu.coeff(r, s) * tk;
  }
  return fam;
}

void validate_terms(const FormalDeformation& def, const char* op) {
  for (const Cochain& t : def.terms)
    if (t.degree != 2 || t.dim != def.base.dim)
      fail(Errc::DimensionMismatch, std::string(op) + ": deformation term has wrong shape");
}

/// L mu(P x, Q y) as a 2-cochain tensor.
Cochain transform_cochain(const RatMatrix& l, const Cochain& mu, const RatMatrix& p, const RatMatrix& q) {
  const Index n = mu.dim;
  Cochain out = Cochain::zero(2, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      RatVector w = RatVector::Constant(n, Rational(0));
      for (Index i = 0; i < n; ++i) {
        if (p(i, a).is_zero()) continue;
        for (Index j = 0; j < n; ++j) {
          if (q(j, b).is_zero()) continue;
          const Rational f = p(i, a) * q(j, b);
          for (Index k = 0; k < n; ++k) w(k) += f * mu.coeff(i * n + j, k);
        }
      }
      const RatVector img = l * w;
      for (Index s = 0; s < n; ++s) out.coeff(a * n + b, s) = img(s);
    }
  return out;
}

}  // namespace

DeformationCheck check_deformation_equation(const FormalDeformation& def, int through_order) {
  validate_terms(def, "check_deformation_equation");
  const int m = (through_order < 0) ? def.order() : through_order;

  const AlgebraT<Poly> fam = polynomial_family(def, def.order());
  const CochainT<Poly> assoc = associator(fam);

  DeformationCheck out;
  out.all_ok = true;
  for (int k = 0; k <= m; ++k) {
    Cochain sum = Cochain::zero(3, def.base.dim);
    for (int i = 0; i <= k; ++i) sum.coeff += circle_product(def.term(i), def.term(k - i)).coeff;
    OrderCheck oc;
    oc.order = k;
    oc.circle_ok = sum.is_zero();

    oc.direct_ok = true;
    for (Index r = 0; r < assoc.coeff.rows() && oc.direct_ok; ++r)
      for (Index s = 0; s < assoc.coeff.cols(); ++s)
        if (!assoc.coeff(r, s).coeff(k).is_zero()) {
          oc.direct_ok = false;
          break;
        }

    if (oc.circle_ok != oc.direct_ok)
      throw std::logic_error("deformation equation: circle-sum and direct expansion disagree");
    out.all_ok = out.all_ok && oc.circle_ok;
    out.orders.push_back(oc);
  }
  return out;
}

std::pair<int, Cochain> infinitesimal(const FormalDeformation& def) {
  validate_terms(def, "infinitesimal");
  for (int p = 1; p <= def.order(); ++p) {
    const Cochain mu = def.term(p);
    if (mu.is_zero()) continue;
    if (check_deformation_equation(def, p).all_ok && !coboundary(def.base, mu).is_zero())
      throw std::logic_error("infinitesimal of a valid deformation must be a 2-cocycle");
    return {p, mu};
  }
  fail(Errc::AllZero, "infinitesimal: all deformation terms vanish");
}

Obstruction obstruction(const FormalDeformation& def, int m) {
  validate_terms(def, "obstruction");
  if (m < 1) fail(Errc::InvalidArgument, "obstruction: order must be at least 1");
  if (!check_deformation_equation(def, m - 1).all_ok)
    fail(Errc::PrefixInvalid, "obstruction: prefix fails the deformation equation below order " + std::to_string(m));

  Obstruction out;
  out.omega = Cochain::zero(3, def.base.dim);
  for (int i = 1; i <= m - 1; ++i) out.omega.coeff += circle_product(def.term(i), def.term(m - i)).coeff;
  if (!coboundary(def.base, out.omega).is_zero())
    throw std::logic_error("obstruction: omega failed to be a 3-cocycle");

  const RatMatrix d2 = delta_matrix(def.base, 2);
  const auto sol = solve<Rational>(d2, cochain_to_vec(out.omega));
  out.solvable = sol.has_value();
  if (sol) out.particular = vec_to_cochain(*sol, 2, def.base.dim);
  const RatMatrix ker = nullspace<Rational>(d2);
  for (Index c = 0; c < ker.cols(); ++c) out.kernel.push_back(vec_to_cochain(ker.col(c), 2, def.base.dim));
  return out;
}

std::variant<FormalDeformation, ExtendFailure> extend(const FormalDeformation& def, int target_order) {
  validate_terms(def, "extend");
  if (!check_deformation_equation(def).all_ok)
    fail(Errc::PrefixInvalid, "extend: input deformation fails its own deformation equation");
  FormalDeformation cur = def;
  for (int m = cur.order() + 1; m <= target_order; ++m) {
    Obstruction obs = obstruction(cur, m);
    if (!obs.solvable) return ExtendFailure{m, std::move(obs.omega)};
    cur.terms.push_back(std::move(*obs.particular));
  }
  if (!check_deformation_equation(cur, target_order).all_ok)
    throw std::logic_error("extend: result fails re-verification");
  return cur;
}

FormalDeformation apply_isomorphism(const FormalIsomorphism& iso, const FormalDeformation& def,
                                    int result_order) {
  validate_terms(def, "apply_isomorphism");
  if (iso.dim != def.base.dim) fail(Errc::DimensionMismatch, "apply_isomorphism: dimension mismatch");
  const int m = (result_order < 0) ? std::max(def.order(), iso.order()) : result_order;

  const FormalIsomorphism inv = inverse_isomorphism(iso, m);
  FormalDeformation out;
  out.base = def.base;
  for (int k = 1; k <= m; ++k) {
    Cochain nu = Cochain::zero(2, def.base.dim);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b)
        for (int c = 0; a + b + c <= k; ++c) {
          const int d = k - a - b - c;
          const Cochain mu = def.term(b);
          if (mu.is_zero()) continue;
          nu.coeff += transform_cochain(inv.term(a), mu, iso.term(c), iso.term(d)).coeff;
        }
    out.terms.push_back(std::move(nu));
  }
  return out;
}

FormalIsomorphism compose_isomorphisms(const FormalIsomorphism& f, const FormalIsomorphism& g, int order) {
  if (f.dim != g.dim) fail(Errc::DimensionMismatch, "compose_isomorphisms: dimension mismatch");
  FormalIsomorphism h;
  h.dim = f.dim;
  for (int k = 1; k <= order; ++k) {
    RatMatrix term = RatMatrix::Constant(f.dim, f.dim, Rational(0));
    for (int i = 0; i <= k; ++i) term += f.term(i) * g.term(k - i);
    h.terms.push_back(std::move(term));
  }
  return h;
}

FormalIsomorphism inverse_isomorphism(const FormalIsomorphism& iso, int order) {
  FormalIsomorphism inv;
  inv.dim = iso.dim;
  for (int k = 1; k <= order; ++k) {
    RatMatrix g = RatMatrix::Constant(iso.dim, iso.dim, Rational(0));
    for (int i = 1; i <= k; ++i) g -= iso.term(i) * inv.term(k - i);
    inv.terms.push_back(std::move(g));
  }
  return inv;
}

TrivializeResult trivialize(const FormalDeformation& def, int max_order) {
  validate_terms(def, "trivialize");
  if (!check_deformation_equation(def, max_order).all_ok)
    fail(Errc::PrefixInvalid, "trivialize: input deformation fails the deformation equation");

  const Index n = def.base.dim;
  const RatMatrix d1 = delta_matrix(def.base, 1);
  FormalDeformation cur = def;
  FormalIsomorphism total;
  total.dim = n;

  for (;;) {
    int p = 0;
    for (int k = 1; k <= max_order; ++k)
      if (!cur.term(k).is_zero()) { p = k; break; }
    if (p == 0) break;

    const Cochain residual = cur.term(p);
    const auto f = solve<Rational>(d1, -cochain_to_vec(residual));
    if (!f) return {std::nullopt, TrivializeObstruction{p, residual}};

    FormalIsomorphism step;
    step.dim = n;
    step.terms.assign(static_cast<std::size_t>(p), RatMatrix::Constant(n, n, Rational(0)));
    RatMatrix fp(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) fp(i, j) = (*f)(i * n + j);
    step.terms.back() = std::move(fp);

    cur = apply_isomorphism(step, cur, max_order);
    total = compose_isomorphisms(total, step, max_order);
  }

  const FormalDeformation verify = apply_isomorphism(total, def, max_order);
  for (int k = 1; k <= max_order; ++k)
    if (!verify.term(k).is_zero()) throw std::logic_error("trivialize: isomorphism fails to trivialize");
  return {total, std::nullopt};
}

InfinitesimalBase universal_infinitesimal(const Algebra& alg) {
  require_associative(alg, "universal_infinitesimal");
  InfinitesimalBase out;
  out.algebra = alg;
  out.representatives = cohomology(alg, 2).representatives;
  for (const Cochain& rep : out.representatives) {
    const FormalDeformation dir{alg, {rep}};
    if (!check_deformation_equation(dir, 1).all_ok)
      throw std::logic_error("universal_infinitesimal: representative fails the order-1 equation");
  }
  return out;
}

FormalDeformation push_out_infinitesimal(const InfinitesimalBase& base, const std::vector<Rational>& coeffs) {
  if (static_cast<Index>(coeffs.size()) != base.dim_h2())
    fail(Errc::DimensionMismatch, "push_out_infinitesimal: expected one coefficient per H^2 basis class");
  Cochain term = Cochain::zero(2, base.algebra.dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) term.coeff += coeffs[i] * base.representatives[i].coeff;
  return FormalDeformation{base.algebra, {term}};
}

bool compatible_classes(const Algebra& alg, const Cochain& f, const Cochain& h) {
  if (f.degree != 2 || h.degree != 2) fail(Errc::InvalidArgument, "compatible_classes: expected 2-cochains");
  if (f.dim != alg.dim || h.dim != alg.dim) fail(Errc::DimensionMismatch, "compatible_classes: dimension mismatch");
  if (!coboundary(alg, f).is_zero() || !coboundary(alg, h).is_zero())
    fail(Errc::NotACocycle, "compatible_classes: inputs must be 2-cocycles");
  const Cochain bracket = gerstenhaber_bracket(f, h);
  return solve<Rational>(delta_matrix(alg, 2), cochain_to_vec(bracket)).has_value();
}

}  // namespace deformlab
