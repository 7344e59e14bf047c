#include "deformlab/degeneration.hpp"

#include <stdexcept>

#include "deformlab/linalg.hpp"

namespace deformlab {

Poly param_determinant(const ParamMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "param_determinant: matrix not square");
  const Index n = m.rows();
  if (n == 0) return Poly(1);
  ParamMatrix a = m;
  Poly prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) { p = i; break; }
      if (p < 0) return Poly();
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

ParamMatrix param_adjugate(const ParamMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "param_adjugate: matrix not square");
  const Index n = m.rows();
  ParamMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = Poly(1);
    return adj;
  }
  ParamMatrix minor(n - 1, n - 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Index mr = 0;
      for (Index r = 0; r < n; ++r) {
        if (r == j) continue;  // adj(i, j) = cofactor(j, i)
        Index mc = 0;
        for (Index c = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc) = m(r, c);
          ++mc;
        }
        ++mr;
      }
      const Poly d = param_determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

ParamMatrix constant_param_matrix(const RatMatrix& m) {
  ParamMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  return out;
}

ParamMatrix phi_plus_t_identity(const RatMatrix& phi) {
  if (phi.rows() != phi.cols()) fail(Errc::DimensionMismatch, "phi_plus_t_identity: matrix not square");
  ParamMatrix out = constant_param_matrix(phi);
  for (Index i = 0; i < phi.rows(); ++i) out(i, i) += Poly::t();
  return out;
}

ParamAlgebra conjugate_family(const ParamMatrix& f, const Algebra& alg) {
  const Index n = alg.dim;
  if (f.rows() != n || f.cols() != n) fail(Errc::DimensionMismatch, "conjugate_family: map has wrong shape");
  const Poly det = param_determinant(f);
  if (det.is_zero()) fail(Errc::IdenticallySingular, "conjugate_family: det f_t = 0 identically");
  const ParamMatrix adj = param_adjugate(f);

  ParamAlgebra out = make_algebra<RationalFn>(n);
  MatrixX<Poly> w = MatrixX<Poly>::Constant(n * n, n, Poly());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index i = 0; i < n; ++i) {
        if (f(i, a).is_zero()) continue;
        for (Index j = 0; j < n; ++j) {
          if (f(j, b).is_zero()) continue;
          const Poly prod = f(i, a) * f(j, b);
          for (Index k = 0; k < n; ++k) {
            const Rational& c = alg.c(i, j, k);
            if (!c.is_zero()) w(a * n + b, k) += c * prod;
          }
        }
      }
  for (Index row = 0; row < n * n; ++row)
    for (Index s = 0; s < n; ++s) {
      Poly numer;
      for (Index k = 0; k < n; ++k)
        if (!w(row, k).is_zero() && !adj(s, k).is_zero()) numer += adj(s, k) * w(row, k);
      out.structure(row, s) = RationalFn(numer, det);
    }
  return out;
}

Algebra evaluate_family(const ParamAlgebra& family, const Rational& t0) {
  const Index n = family.dim;
  Algebra out = make_algebra<Rational>(n);
  for (Index row = 0; row < n * n; ++row)
    for (Index s = 0; s < n; ++s) out.structure(row, s) = family.structure(row, s).eval(t0);
  out.unity = detect_unity(out);
  return out;
}

LimitResult limit_at_zero(const ParamAlgebra& family) {
  const Index n = family.dim;
  LimitResult out;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const int val = family.c(i, j, k).valuation_at_zero();
        if (val < 0) out.poles.push_back({i, j, k, -val});
      }
  if (!out.poles.empty()) return out;
  out.algebra = evaluate_family(family, Rational(0));
  return out;
}

FittingData fitting(const RatMatrix& phi) {
  if (phi.rows() != phi.cols()) fail(Errc::DimensionMismatch, "fitting: matrix not square");
  const Index n = phi.rows();

  // Smallest q with ker(phi^q) = ker(phi^{q+1}); phi^0 = Id gives q = 0 for
  // invertible phi.
  RatMatrix power = RatMatrix::Identity(n, n);
  Index prev_rank = n;
  int q = 0;
  for (;; ++q) {
    const RatMatrix next = phi * power;
    const Index r = rank<Rational>(next);
    if (r == prev_rank) break;
    power = next;
    prev_rank = r;
  }

  FittingData out;
  out.q = q;

  RowSpace<Rational> image(n);
  std::vector<Index> image_cols;
  for (Index c = 0; c < n; ++c)
    if (image.insert(power.col(c))) image_cols.push_back(c);
  out.basis_r = RatMatrix(n, static_cast<Index>(image_cols.size()));
  for (std::size_t c = 0; c < image_cols.size(); ++c) out.basis_r.col(static_cast<Index>(c)) = power.col(image_cols[c]);
  out.basis_n = nullspace<Rational>(power);

  const Index r = out.basis_r.cols();
  RatMatrix p(n, n);
  p.leftCols(r) = out.basis_r;
  p.rightCols(n - r) = out.basis_n;
  const auto pinv = inverse<Rational>(p);
  if (!pinv) throw std::logic_error("fitting: V_R + V_N failed to be a direct sum");

  const RatMatrix conj = (*pinv) * phi * p;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (((i < r) != (j < r)) && !conj(i, j).is_zero())
        throw std::logic_error("fitting: parts are not phi-invariant");
  out.phi_on_r = conj.topLeftCorner(r, r);
  out.phi_on_n = conj.bottomRightCorner(n - r, n - r);
  return out;
}

PhiDegeneration phi_degeneration(const RatMatrix& phi, const Algebra& alg) {
  const Index n = alg.dim;
  if (phi.rows() != n || phi.cols() != n) fail(Errc::DimensionMismatch, "phi_degeneration: map has wrong shape");

  const FittingData fit = fitting(phi);
  const Index r = fit.basis_r.cols();
  RatMatrix p(n, n);
  p.leftCols(r) = fit.basis_r;
  p.rightCols(n - r) = fit.basis_n;
  const RatMatrix pinv = *inverse<Rational>(p);

  RatMatrix proj_n = RatMatrix::Constant(n, n, Rational(0));
  {
    RatMatrix sel = RatMatrix::Constant(n, n, Rational(0));
    for (Index i = r; i < n; ++i) sel(i, i) = Rational(1);
    proj_n = p * sel * pinv;
  }
  const RatMatrix proj_r = RatMatrix::Identity(n, n) - proj_n;

  // x -> (phi restricted to V_R)^{-1} (x_R).
  RatMatrix phi_r_inv = RatMatrix::Constant(n, n, Rational(0));
  if (r > 0) {
    const auto block_inv = inverse<Rational>(fit.phi_on_r);
    if (!block_inv) throw std::logic_error("phi_degeneration: phi is singular on V_R");
    RatMatrix sel = RatMatrix::Constant(n, n, Rational(0));
    sel.topLeftCorner(r, r) = *block_inv;
    phi_r_inv = p * sel * pinv;
  }

  Cochain residual = Cochain::zero(2, n);
  Algebra out = make_algebra<Rational>(n);
  bool ok = true;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const RatVector ea = out.basis_vector(a), eb = out.basis_vector(b);
      const RatVector pa = phi * ea, pb = phi * eb;
      const RatVector m_ab = alg.mul(ea, eb);
      const RatVector m_pa_b = alg.mul(pa, eb);
      const RatVector m_a_pb = alg.mul(ea, pb);
      const RatVector m_pa_pb = alg.mul(pa, pb);

      const RatVector cond = phi * (phi * (proj_n * m_ab)) - phi * (proj_n * m_pa_b) -
                             phi * (proj_n * m_a_pb) + proj_n * m_pa_pb;
      for (Index s = 0; s < n; ++s) {
        residual.coeff(a * n + b, s) = cond(s);
        if (!cond(s).is_zero()) ok = false;
      }

      const RatVector limit = phi_r_inv * (proj_r * m_pa_pb) + proj_n * m_pa_b + proj_n * m_a_pb -
                              phi * (proj_n * m_ab);
      for (Index s = 0; s < n; ++s) out.c(a, b, s) = limit(s);
    }

  PhiDegeneration result;
  if (!ok) {
    result.residual = std::move(residual);
    return result;
  }
  out.unity = detect_unity(out);
  result.algebra = std::move(out);
  return result;
}

}  // namespace deformlab
