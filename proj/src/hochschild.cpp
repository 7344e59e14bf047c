#include "deformlab/hochschild.hpp"

#include <stdexcept>

namespace deformlab {

namespace {

void require_same_dim(const Cochain& phi, const Cochain& psi, const char* op) {
  if (phi.dim != psi.dim) fail(Errc::DimensionMismatch, std::string(op) + ": cochain dimensions differ");
}

int pow_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Cochain coboundary(const Algebra& alg, const Cochain& phi) {
  if (phi.dim != alg.dim) fail(Errc::DimensionMismatch, "coboundary: cochain dimension differs from algebra");
  const Index n = alg.dim;
  const int d = phi.degree;
  Cochain out = Cochain::zero(d + 1, n);

  const Index rows = phi.coeff.rows();
  for (Index row = 0; row < rows; ++row) {
    std::vector<Index> j = decode_multi(row, n, d);
    for (Index s = 0; s < n; ++s) {
      const Rational& val = phi.coeff(row, s);
      if (val.is_zero()) continue;

      // mu(x_1, phi(x_2..x_{d+1})) with (x_2..x_{d+1}) = j, phi output s.
      for (Index x1 = 0; x1 < n; ++x1) {
        const Index out_row = x1 * rows + row;
        for (Index k = 0; k < n; ++k) {
          const Rational& c = alg.c(x1, s, k);
          if (!c.is_zero()) out.coeff(out_row, k) += c * val;
        }
      }

      // (-1)^i phi(x_1.., mu(x_i, x_{i+1}), ..): slot p of j receives the product.
      std::vector<Index> widened(static_cast<std::size_t>(d + 1));
      for (int p = 0; p < d; ++p) {
        const int sign = pow_sign(p + 1);
        for (int q = 0; q < p; ++q) widened[static_cast<std::size_t>(q)] = j[static_cast<std::size_t>(q)];
        for (int q = p + 1; q < d; ++q) widened[static_cast<std::size_t>(q + 1)] = j[static_cast<std::size_t>(q)];
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) {
            const Rational& c = alg.c(a, b, j[static_cast<std::size_t>(p)]);
            if (c.is_zero()) continue;
            widened[static_cast<std::size_t>(p)] = a;
            widened[static_cast<std::size_t>(p + 1)] = b;
            const Index out_row = encode_multi(widened, n);
            const Rational term = c * val;
            if (sign > 0)
              out.coeff(out_row, s) += term;
            else
              out.coeff(out_row, s) -= term;
          }
      }

      // (-1)^{d+1} mu(phi(x_1..x_d), x_{d+1}).
      const int last_sign = pow_sign(d + 1);
      for (Index xl = 0; xl < n; ++xl) {
        const Index out_row = row * n + xl;
        for (Index k = 0; k < n; ++k) {
          const Rational& c = alg.c(s, xl, k);
          if (c.is_zero()) continue;
          const Rational term = c * val;
          if (last_sign > 0)
            out.coeff(out_row, k) += term;
          else
            out.coeff(out_row, k) -= term;
        }
      }
    }
  }
  return out;
}

Cochain circle_product(const Cochain& phi, const Cochain& psi) {
  require_same_dim(phi, psi, "circle_product");
  if (phi.degree < 1 || psi.degree < 1)
    fail(Errc::InvalidArgument, "circle_product: degrees must be at least 1");
  const Index n = phi.dim;
  const int d = phi.degree, e = psi.degree;
  const int g = d + e - 1;
  Cochain out = Cochain::zero(g, n);

  std::vector<Index> phi_idx(static_cast<std::size_t>(d));
  std::vector<Index> psi_idx(static_cast<std::size_t>(e));
  for (Index row = 0; row < out.coeff.rows(); ++row) {
    const std::vector<Index> args = decode_multi(row, n, g);
    for (int i = 0; i < d; ++i) {
      const int sign = pow_sign(static_cast<long>(i) * (e - 1));
      for (int q = 0; q < i; ++q) phi_idx[static_cast<std::size_t>(q)] = args[static_cast<std::size_t>(q)];
      for (int q = 0; q < e; ++q) psi_idx[static_cast<std::size_t>(q)] = args[static_cast<std::size_t>(i + q)];
      for (int q = i + e; q < g; ++q) phi_idx[static_cast<std::size_t>(q - e + 1)] = args[static_cast<std::size_t>(q)];
      const Index psi_row = encode_multi(psi_idx, n);
      for (Index s = 0; s < n; ++s) {
        const Rational& inner = psi.coeff(psi_row, s);
        if (inner.is_zero()) continue;
        phi_idx[static_cast<std::size_t>(i)] = s;
        const Index phi_row = encode_multi(phi_idx, n);
        for (Index k = 0; k < n; ++k) {
          const Rational& outer = phi.coeff(phi_row, k);
          if (outer.is_zero()) continue;
          const Rational term = outer * inner;
          if (sign > 0)
            out.coeff(row, k) += term;
          else
            out.coeff(row, k) -= term;
        }
      }
    }
  }
  return out;
}

Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi) {
  require_same_dim(phi, psi, "gerstenhaber_bracket");
  const int d = phi.degree, e = psi.degree;
  Cochain left = circle_product(phi, psi);
  const Cochain right = circle_product(psi, phi);
  const int sign = pow_sign(static_cast<long>(e - 1) * (d - 1));
  if (sign > 0)
    left.coeff -= right.coeff;
  else
    left.coeff += right.coeff;
  return left;
}

RatVector cochain_to_vec(const Cochain& phi) {
  const Index rows = phi.coeff.rows(), n = phi.dim;
  RatVector v(rows * n);
  for (Index r = 0; r < rows; ++r)
    for (Index k = 0; k < n; ++k) v(r * n + k) = phi.coeff(r, k);
  return v;
}

Cochain vec_to_cochain(const RatVector& v, int degree, Index dim) {
  Cochain c = Cochain::zero(degree, dim);
  if (v.rows() != c.coeff.rows() * dim) fail(Errc::DimensionMismatch, "vec_to_cochain: length mismatch");
  for (Index r = 0; r < c.coeff.rows(); ++r)
    for (Index k = 0; k < dim; ++k) c.coeff(r, k) = v(r * dim + k);
  return c;
}

RatMatrix delta_matrix(const Algebra& alg, int degree) {
  if (degree < 0) fail(Errc::InvalidArgument, "delta_matrix: negative degree");
  const Index n = alg.dim;
  const Index dom = int_pow(n, degree) * n;
  const Index cod = int_pow(n, degree + 1) * n;
  RatMatrix m = RatMatrix::Constant(cod, dom, Rational(0));
  Cochain basis = Cochain::zero(degree, n);
  for (Index r = 0; r < basis.coeff.rows(); ++r)
    for (Index s = 0; s < n; ++s) {
      basis.coeff(r, s) = Rational(1);
      m.col(r * n + s) = cochain_to_vec(coboundary(alg, basis));
      basis.coeff(r, s) = Rational(0);
    }
  return m;
}

std::pair<Index, Index> cohomology_dims(const Algebra& alg, int degree) {
  if (degree < 1) fail(Errc::InvalidArgument, "cohomology: degree must be at least 1");
  require_associative(alg, "cohomology");
  const Index dom = int_pow(alg.dim, degree) * alg.dim;
  const Index dim_z = dom - rank<Rational>(delta_matrix(alg, degree));
  const Index dim_b = rank<Rational>(delta_matrix(alg, degree - 1));
  return {dim_z, dim_b};
}

CohomologySpace cohomology(const Algebra& alg, int degree) {
  if (degree < 1) fail(Errc::InvalidArgument, "cohomology: degree must be at least 1");
  require_associative(alg, "cohomology");
  const Index n = alg.dim;
  CohomologySpace out;
  out.degree = degree;

  const RatMatrix kernel = nullspace<Rational>(delta_matrix(alg, degree));
  out.dim_z = kernel.cols();

  const RatMatrix prev = delta_matrix(alg, degree - 1);
  RowSpace<Rational> span(kernel.rows());
  for (Index c = 0; c < prev.cols(); ++c) span.insert(prev.col(c));
  out.dim_b = span.rank();

  for (Index c = 0; c < kernel.cols(); ++c)
    if (span.insert(kernel.col(c))) out.representatives.push_back(vec_to_cochain(kernel.col(c), degree, n));
  out.dim_h = out.dim_z - out.dim_b;
  if (static_cast<Index>(out.representatives.size()) != out.dim_h)
    throw std::logic_error("cohomology: representative count disagrees with dim H");
  return out;
}

std::optional<Cochain> is_coboundary(const Algebra& alg, const Cochain& phi) {
  if (phi.degree < 1) fail(Errc::InvalidArgument, "is_coboundary: degree must be at least 1");
  if (phi.dim != alg.dim) fail(Errc::DimensionMismatch, "is_coboundary: dimension mismatch");
  if (!coboundary(alg, phi).is_zero()) fail(Errc::NotACocycle, "is_coboundary: input is not a cocycle");
  const auto x = solve<Rational>(delta_matrix(alg, phi.degree - 1), cochain_to_vec(phi));
  if (!x) return std::nullopt;
  Cochain f = vec_to_cochain(*x, phi.degree - 1, alg.dim);
  if (!(coboundary(alg, f) == phi)) throw std::logic_error("is_coboundary: witness fails to verify");
  return f;
}

SqClass sq_class(const Algebra& alg, const Cochain& phi) {
  if (phi.degree != 2) fail(Errc::InvalidArgument, "sq_class: expected a 2-cochain");
  if (!coboundary(alg, phi).is_zero()) fail(Errc::NotACocycle, "sq_class: input is not a 2-cocycle");
  SqClass out;
  out.square = circle_product(phi, phi);
  if (!coboundary(alg, out.square).is_zero())
    throw std::logic_error("sq_class: square of a cocycle failed to be a cocycle");
  out.witness = is_coboundary(alg, out.square);
  out.coboundary = out.witness.has_value();
  return out;
}

}  // namespace deformlab
