#include "deformlab/variety.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "deformlab/degeneration.hpp"
#include "deformlab/hochschild.hpp"

namespace deformlab {

namespace {

// ---------------------------------------------------------------------------
// Exact solving of the idempotent equation on basis-pair planes.
//
// Restricted to x = alpha e_i + beta e_j the equation mu(x,x) = x is a system
// of bivariate quadratics. The solver below walks a small case tree (pure
// univariate equations, equations linear in one variable, and a Sylvester
// resultant for the genuinely quadratic case) and verifies every candidate
// exactly, so returned points are always solutions; completeness is not
// promised when the system degenerates.
// ---------------------------------------------------------------------------

struct Biquad {
  // a20 x^2 + a11 x y + a02 y^2 + a10 x + a01 y + a00
  Rational a20, a11, a02, a10, a01, a00;

  bool is_zero() const {
    return a20.is_zero() && a11.is_zero() && a02.is_zero() && a10.is_zero() && a01.is_zero() && a00.is_zero();
  }
  bool no_y() const { return a11.is_zero() && a02.is_zero() && a01.is_zero(); }
  bool no_x() const { return a11.is_zero() && a20.is_zero() && a10.is_zero(); }

  Rational eval(const Rational& x, const Rational& y) const {
    return a20 * x * x + a11 * x * y + a02 * y * y + a10 * x + a01 * y + a00;
  }

  /// Coefficients as a quadratic in y: (a02) y^2 + (a11 x + a01) y + rest(x).
  Poly y2() const { return Poly(a02); }
  Poly y1() const { return Poly(std::vector<Rational>{a01, a11}); }
  Poly y0() const { return Poly(std::vector<Rational>{a00, a10, a20}); }

  /// The same, swapping the roles of x and y.
  Biquad flipped() const { return Biquad{a02, a11, a20, a01, a10, a00}; }
};

std::vector<mpz_class> positive_divisors(mpz_class v, long cap = 200000) {
  std::vector<mpz_class> out;
  if (v < 0) v = -v;
  if (v == 0 || v > cap) return out;  // callers fall back to incompleteness
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      out.push_back(v / d);
    }
  return out;
}

/// All rational roots of p, exactly. Complete for degree <= 2; for higher
/// degrees complete whenever the divisor enumeration stays under its cap.
std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) return roots;
  Poly q = p;
  const int val = q.valuation();
  if (val > 0) {
    roots.push_back(Rational(0));
    std::vector<Rational> shifted(q.coeffs().begin() + val, q.coeffs().end());
    q = Poly(std::move(shifted));
  }
  const int d = q.degree();
  if (d == 1) {
    roots.push_back(-q.coeff(0) / q.coeff(1));
  } else if (d == 2) {
    const Rational disc = q.coeff(1) * q.coeff(1) - Rational(4) * q.coeff(2) * q.coeff(0);
    if (const auto s = exact_sqrt(disc)) {
      const Rational two_a = Rational(2) * q.coeff(2);
      roots.push_back((-q.coeff(1) + *s) / two_a);
      if (!s->is_zero()) roots.push_back((-q.coeff(1) - *s) / two_a);
    }
  } else if (d >= 3) {
    mpz_class scale = 1;
    for (const Rational& c : q.coeffs()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
      scale = l;
    }
    std::vector<mpz_class> ic;
    for (const Rational& c : q.coeffs()) ic.push_back(c.numerator() * (scale / c.denominator()));
    for (const mpz_class& num : positive_divisors(ic.front()))
      for (const mpz_class& den : positive_divisors(ic.back()))
        for (int sign = -1; sign <= 1; sign += 2) {
          const Rational cand = Rational(sign) * Rational::parse(num.get_str() + "/" + den.get_str());
          if (q.eval(cand).is_zero() &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  return roots;
}

/// Univariate quadratic u2 z^2 + u1 z + u0 = 0 (not all coefficients zero).
std::vector<Rational> quadratic_roots(const Rational& u2, const Rational& u1, const Rational& u0) {
  return rational_roots(Poly(std::vector<Rational>{u0, u1, u2}));
}

std::vector<std::pair<Rational, Rational>> solve_biquad_system(const std::vector<Biquad>& raw) {
  std::vector<Biquad> eqs;
  for (const Biquad& e : raw)
    if (!e.is_zero()) eqs.push_back(e);

  std::vector<std::pair<Rational, Rational>> candidates;
  auto add_with_y = [&](const Rational& x) {
    // Substitute x; the system becomes univariate quadratics in y.
    bool solved = false;
    for (const Biquad& e : eqs) {
      const Rational c2 = e.a02;
      const Rational c1 = e.a11 * x + e.a01;
      const Rational c0 = e.a20 * x * x + e.a10 * x + e.a00;
      if (c2.is_zero() && c1.is_zero()) continue;
      for (const Rational& y : quadratic_roots(c2, c1, c0)) candidates.emplace_back(x, y);
      solved = true;
      break;
    }
    if (!solved) candidates.emplace_back(x, Rational(0));  // y unconstrained; pick 0
  };

  if (eqs.empty()) return candidates;

  for (const Biquad& e : eqs) {
    if (e.no_y()) {
      for (const Rational& x : quadratic_roots(e.a20, e.a10, e.a00)) add_with_y(x);
      return candidates;
    }
    if (e.no_x()) {
      for (const Rational& y : quadratic_roots(e.a02, e.a01, e.a00)) {
        for (const Biquad& f : eqs) {
          const Rational c2 = f.a20;
          const Rational c1 = f.a11 * y + f.a10;
          const Rational c0 = f.a02 * y * y + f.a01 * y + f.a00;
          if (c2.is_zero() && c1.is_zero()) continue;
          for (const Rational& x : quadratic_roots(c2, c1, c0)) candidates.emplace_back(x, y);
          break;
        }
        candidates.emplace_back(Rational(0), y);
      }
      return candidates;
    }
  }

  // An equation linear in y: substitute y = -(a20 x^2 + a10 x + a00) / (a11 x + a01).
  for (const Biquad& e : eqs) {
    if (!e.a02.is_zero()) continue;
    const Poly den = e.y1();  // a11 x + a01
    const Poly num = -e.y0();
    if (den.is_zero()) continue;
    for (const Biquad& f : eqs) {
      if (&f == &e) continue;
      // f with y = num/den, cleared by den^2.
      const Poly p = f.y2() * num * num + f.y1() * num * den + f.y0() * den * den;
      if (p.is_zero()) continue;
      for (const Rational& x : rational_roots(p)) {
        const Rational d = den.eval(x);
        if (d.is_zero()) continue;
        candidates.emplace_back(x, num.eval(x) / d);
      }
      return candidates;
    }
    // Lone linear-in-y equation: roots of den give x with num forced to 0.
    for (const Rational& x : rational_roots(den))
      if (num.eval(x).is_zero()) add_with_y(x);
    return candidates;
  }

  // Two genuinely quadratic-in-y equations: Sylvester resultant in y.
  if (eqs.size() >= 2) {
    const Biquad& e = eqs[0];
    const Biquad& f = eqs[1];
    ParamMatrix syl = ParamMatrix::Constant(4, 4, Poly());
    syl(0, 0) = e.y2(); syl(0, 1) = e.y1(); syl(0, 2) = e.y0();
    syl(1, 1) = e.y2(); syl(1, 2) = e.y1(); syl(1, 3) = e.y0();
    syl(2, 0) = f.y2(); syl(2, 1) = f.y1(); syl(2, 2) = f.y0();
    syl(3, 1) = f.y2(); syl(3, 2) = f.y1(); syl(3, 3) = f.y0();
    const Poly res = param_determinant(syl);
    if (!res.is_zero())
      for (const Rational& x : rational_roots(res)) add_with_y(x);
  }
  return candidates;
}

RatVector to_rational_vector(const Eigen::VectorXd& x, long max_den) {
  RatVector v(x.rows());
  for (Index i = 0; i < x.rows(); ++i) v(i) = reconstruct_rational(x(i), max_den);
  return v;
}

std::string vector_key(const RatVector& v) {
  std::string key;
  for (Index i = 0; i < v.rows(); ++i) {
    key += v(i).str();
    key += ',';
  }
  return key;
}

}  // namespace

Index derivation_dim(const Algebra& alg) {
  require_associative(alg, "derivation_dim");
  const Index n = alg.dim;
  RatMatrix m = RatMatrix::Constant(n * n * n, n * n, Rational(0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index s = 0; s < n; ++s) {
        const Index row = (i * n + j) * n + s;
        for (Index l = 0; l < n; ++l) {
          m(row, s * n + l) += alg.c(i, j, l);      // D applied to the product
          m(row, l * n + i) -= alg.c(l, j, s);      // mu(D e_i, e_j)
          m(row, l * n + j) -= alg.c(i, l, s);      // mu(e_i, D e_j)
        }
      }
  return n * n - rank<Rational>(m);
}

std::pair<Index, Index> tangent_dims(const Algebra& alg) { return cohomology_dims(alg, 2); }

RigidityReport rigidity_report(const Algebra& alg) {
  require_associative(alg, "rigidity_report");
  RigidityReport r;
  r.dim = alg.dim;

  const CohomologySpace h2 = cohomology(alg, 2);
  r.dim_z2 = h2.dim_z;
  r.dim_b2 = h2.dim_b;
  r.dim_h2 = h2.dim_h;
  const auto [z3, b3] = cohomology_dims(alg, 3);
  r.dim_h3 = z3 - b3;
  r.dim_der = derivation_dim(alg);
  r.orbit_dim = alg.dim * alg.dim - r.dim_der;
  r.algebraically_rigid = (r.dim_h2 == 0);
  r.formally_rigid_via_h2 = r.algebraically_rigid;

  for (const Cochain& rep : h2.representatives) r.sq_coboundary.push_back(sq_class(alg, rep).coboundary);

  if (r.algebraically_rigid) {
    r.notes.push_back("formally rigid: YES (via H2 = 0)");
  } else {
    r.notes.push_back("formal rigidity: undetermined by implemented criteria (H2 != 0)");
    r.notes.push_back("Sq evidence is advisory; injectivity of Sq is not decided");
  }
  return r;
}

IdempotentSearch idempotent_search(const Algebra& alg, std::uint64_t seed, int newton_seeds) {
  require_associative(alg, "idempotent_search");
  const Index n = alg.dim;

  std::vector<RatVector> found;
  std::set<std::string> seen;
  auto offer = [&](const RatVector& x) {
    if (!is_idempotent(alg, x)) return;
    if (seen.insert(vector_key(x)).second) found.push_back(x);
  };

  offer(RatVector::Constant(n, Rational(0)));

  // Basis rays: alpha e_i with alpha^2 mu(e_i, e_i) = alpha e_i.
  for (Index i = 0; i < n; ++i) {
    const RatVector sq = alg.mul(alg.basis_vector(i), alg.basis_vector(i));
    const Rational diag = sq(i);
    if (diag.is_zero()) continue;
    RatVector x = RatVector::Constant(n, Rational(0));
    x(i) = Rational(1) / diag;
    offer(x);
  }

  // Basis-pair planes, solved exactly.
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const RatVector mii = alg.mul(alg.basis_vector(i), alg.basis_vector(i));
      const RatVector mij = alg.mul(alg.basis_vector(i), alg.basis_vector(j));
      const RatVector mji = alg.mul(alg.basis_vector(j), alg.basis_vector(i));
      const RatVector mjj = alg.mul(alg.basis_vector(j), alg.basis_vector(j));
      std::vector<Biquad> eqs;
      for (Index k = 0; k < n; ++k) {
        Biquad e;
        e.a20 = mii(k);
        e.a11 = mij(k) + mji(k);
        e.a02 = mjj(k);
        e.a10 = (k == i) ? Rational(-1) : Rational(0);
        e.a01 = (k == j) ? Rational(-1) : Rational(0);
        eqs.push_back(e);
      }
      for (const auto& [alpha, beta] : solve_biquad_system(eqs)) {
        RatVector x = RatVector::Constant(n, Rational(0));
        x(i) = alpha;
        x(j) = beta;
        offer(x);
      }
    }

  // Newton from random seeds, then rational reconstruction + exact check.
  Eigen::MatrixXd st(n * n, n);
  for (Index r = 0; r < n * n; ++r)
    for (Index k = 0; k < n; ++k) st(r, k) = alg.structure(r, k).to_double();
  auto dmul = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) w += u(i) * v(j) * st.row(i * n + j).transpose();
    return w;
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < newton_seeds; ++trial) {
    Eigen::VectorXd x(n);
    for (Index i = 0; i < n; ++i) x(i) = dist(rng);
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      const Eigen::VectorXd f = dmul(x, x) - x;
      if (f.norm() < 1e-12) { converged = true; break; }
      Eigen::MatrixXd jac(n, n);
      for (Index c = 0; c < n; ++c) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e(c) = 1.0;
        jac.col(c) = dmul(x, e) + dmul(e, x) - e;
      }
      const Eigen::VectorXd step = jac.fullPivLu().solve(-f);
      if (!step.allFinite()) break;
      x += step;
      if (!x.allFinite() || x.norm() > 1e6) break;
    }
    if (converged) offer(to_rational_vector(x, 10000));
  }

  std::sort(found.begin(), found.end(),
            [](const RatVector& a, const RatVector& b) { return vector_key(a) < vector_key(b); });

  RowSpace<Rational> span(n);
  for (const RatVector& x : found) span.insert(x);

  IdempotentSearch out;
  out.idempotents = std::move(found);
  out.independent_count = span.rank();
  return out;
}

std::vector<RatVector> idempotent_continuation(const FormalDeformation& def, const RatVector& x0, int order) {
  const Index n = def.base.dim;
  if (x0.rows() != n) fail(Errc::DimensionMismatch, "idempotent_continuation: vector has wrong dimension");
  if (!is_idempotent(def.base, x0))
    fail(Errc::InvalidArgument, "idempotent_continuation: x0 is not an idempotent of the base");

  RatMatrix lin(n, n);
  for (Index c = 0; c < n; ++c) {
    const RatVector e = def.base.basis_vector(c);
    lin.col(c) = def.base.mul(x0, e) + def.base.mul(e, x0) - e;
  }
  const auto lin_inv = inverse<Rational>(lin);
  if (!lin_inv)
    fail(Errc::SingularLinearization, "idempotent_continuation: the order-by-order solve is not unique");

  std::vector<RatVector> x{x0};
  for (int k = 1; k <= order; ++k) {
    RatVector rhs = RatVector::Constant(n, Rational(0));
    for (int a = 0; a <= k; ++a) {
      const Cochain mu = def.term(a);
      if (mu.is_zero()) continue;
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if (b == k || c == k) continue;
        rhs += eval_bilinear(mu, x[static_cast<std::size_t>(b)], x[static_cast<std::size_t>(c)]);
      }
    }
    x.push_back((*lin_inv) * (-rhs));
  }

  for (int k = 0; k <= order; ++k) {
    RatVector total = RatVector::Constant(n, Rational(0));
    for (int a = 0; a <= k; ++a) {
      const Cochain mu = def.term(a);
      if (mu.is_zero()) continue;
      for (int b = 0; a + b <= k; ++b)
        total += eval_bilinear(mu, x[static_cast<std::size_t>(b)], x[static_cast<std::size_t>(k - a - b)]);
    }
    if (total != x[static_cast<std::size_t>(k)])
      throw std::logic_error("idempotent_continuation: identity fails at order " + std::to_string(k));
  }
  return x;
}

Census census_dim2() {
  Census census;
  for (const char* id : {"a0", "a1"}) {
    const Algebra& alg = registry_algebra(id);
    CensusEntry e;
    e.id = id;
    e.dim = alg.dim;
    e.associative = is_associative(alg);
    e.unital = alg.unity && check_unity(alg);
    e.dim_der = derivation_dim(alg);
    e.dim_h2 = cohomology_dims(alg, 2).first - cohomology_dims(alg, 2).second;
    e.idempotent_count = idempotent_search(alg).independent_count;
    e.rigid = (e.dim_h2 == 0);
    census.entries.push_back(e);
  }

  // Degeneration witness: diag(1, t) carries a1 to a0 in the limit.
  ParamMatrix f = constant_param_matrix(RatMatrix::Identity(2, 2));
  f(1, 1) = Poly::t();
  const LimitResult lim = limit_at_zero(conjugate_family(f, registry_algebra("a1")));
  census.degeneration_verified =
      lim.algebra && lim.algebra->structure == registry_algebra("a0").structure;
  census.degeneration_witness = "a1 degenerates to a0 via f_t = diag(1, t)";

  census.nontrivial_deformation_of_a0 = push_out_infinitesimal(
      universal_infinitesimal(registry_algebra("a0")), {Rational(1)});

  census.rigid_count = 0;
  for (const CensusEntry& e : census.entries)
    if (e.rigid) ++census.rigid_count;
  census.component_count = 1;  // the rigid class a1 dominates; a0 lies in its orbit closure
  return census;
}

}  // namespace deformlab
