#pragma once

#include <optional>
#include <vector>

#include "deformlab/dense.hpp"
#include "deformlab/error.hpp"
#include "deformlab/linalg.hpp"

namespace deformlab {

/// d-linear map V^d -> V stored as an (n^d x n) coefficient matrix:
/// row = row-major rank of the input multi-index, column = output index.
template <class S>
struct CochainT {
  int degree = 0;
  Index dim = 0;
  MatrixX<S> coeff;

  static CochainT zero(int degree, Index dim) {
    CochainT c;
    c.degree = degree;
    c.dim = dim;
    c.coeff = MatrixX<S>::Constant(int_pow(dim, degree), dim, S(0));
    return c;
  }

  bool is_zero() const { return is_zero_matrix(coeff); }

  friend bool operator==(const CochainT& a, const CochainT& b) {
    return a.degree == b.degree && a.dim == b.dim && a.coeff == b.coeff;
  }
};

using Cochain = CochainT<Rational>;

/// Algebra on an n-dimensional space given by structure constants
/// C[i*n+j][k] = coefficient of e_k in e_i * e_j. Associativity is not an
/// invariant of the type; raw tensors are permitted and checked by operation.
template <class S>
struct AlgebraT {
  Index dim = 0;
  MatrixX<S> structure;  // (n^2 x n)
  std::optional<Index> unity;

  const S& c(Index i, Index j, Index k) const { return structure(i * dim + j, k); }
  S& c(Index i, Index j, Index k) { return structure(i * dim + j, k); }

  VectorX<S> mul(const VectorX<S>& u, const VectorX<S>& v) const {
    VectorX<S> w = VectorX<S>::Constant(dim, S(0));
    for (Index i = 0; i < dim; ++i) {
      if (u(i).is_zero()) continue;
      for (Index j = 0; j < dim; ++j) {
        if (v(j).is_zero()) continue;
        const S f = u(i) * v(j);
        for (Index k = 0; k < dim; ++k) w(k) += f * c(i, j, k);
      }
    }
    return w;
  }

  VectorX<S> basis_vector(Index i) const {
    VectorX<S> e = VectorX<S>::Constant(dim, S(0));
    e(i) = S(1);
    return e;
  }

  CochainT<S> multiplication() const {
    CochainT<S> m;
    m.degree = 2;
    m.dim = dim;
    m.coeff = structure;
    return m;
  }

  friend bool operator==(const AlgebraT& a, const AlgebraT& b) {
    return a.dim == b.dim && a.structure == b.structure && a.unity == b.unity;
  }
};

using Algebra = AlgebraT<Rational>;

template <class S>
AlgebraT<S> make_algebra(Index dim, std::optional<Index> unity = std::nullopt) {
  AlgebraT<S> a;
  a.dim = dim;
  a.structure = MatrixX<S>::Constant(dim * dim, dim, S(0));
  a.unity = unity;
  return a;
}

/// Unital algebra whose only nonzero products involve the unity e_0.
template <class S = Rational>
AlgebraT<S> null_algebra(Index dim) {
  AlgebraT<S> a = make_algebra<S>(dim, 0);
  for (Index i = 0; i < dim; ++i) {
    a.c(0, i, i) = S(1);
    if (i != 0) a.c(i, 0, i) = S(1);
  }
  return a;
}

/// The 3-cochain (x,y,z) -> (xy)z - x(yz); zero iff the algebra associates.
template <class S>
CochainT<S> associator(const AlgebraT<S>& alg) {
  const Index n = alg.dim;
  CochainT<S> r = CochainT<S>::zero(3, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Index row = (i * n + j) * n + k;
        for (Index l = 0; l < n; ++l) {
          const S& left = alg.c(i, j, l);
          if (!left.is_zero())
            for (Index s = 0; s < n; ++s) r.coeff(row, s) += left * alg.c(l, k, s);
          const S& right = alg.c(j, k, l);
          if (!right.is_zero())
            for (Index s = 0; s < n; ++s) r.coeff(row, s) -= alg.c(i, l, s) * right;
        }
      }
  return r;
}

template <class S>
bool is_associative(const AlgebraT<S>& alg) {
  return associator(alg).is_zero();
}

template <class S>
void require_associative(const AlgebraT<S>& alg, const char* op) {
  if (!is_associative(alg)) fail(Errc::NotAssociative, std::string(op) + ": algebra is not associative");
}

/// True iff C[u,i->j] = C[i,u->j] = delta_ij holds exactly for the declared
/// unity index; requires unity to be set.
template <class S>
bool check_unity(const AlgebraT<S>& alg) {
  if (!alg.unity) fail(Errc::InvalidArgument, "check_unity: no unity index set");
  const Index u = *alg.unity, n = alg.dim;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const S want = (i == j) ? S(1) : S(0);
      if (alg.c(u, i, j) != want || alg.c(i, u, j) != want) return false;
    }
  return true;
}

/// First basis index that satisfies the unity constraints, if any.
template <class S>
std::optional<Index> detect_unity(const AlgebraT<S>& alg) {
  AlgebraT<S> probe = alg;
  for (Index u = 0; u < alg.dim; ++u) {
    probe.unity = u;
    if (check_unity(probe)) return u;
  }
  return std::nullopt;
}

/// Basis change (f . mu)(x, y) = f^{-1}(mu(f x, f y)). The unity index is not
/// transported: it is kept only if it still passes check_unity afterwards.
template <class S>
AlgebraT<S> apply_basis_change(const MatrixX<S>& f, const AlgebraT<S>& alg) {
  const Index n = alg.dim;
  if (f.rows() != n || f.cols() != n) fail(Errc::DimensionMismatch, "apply_basis_change: map has wrong shape");
  const auto finv = inverse<S>(f);
  if (!finv) fail(Errc::SingularMap, "apply_basis_change: map is singular");
  AlgebraT<S> out = make_algebra<S>(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const VectorX<S> w = alg.mul(f.col(a), f.col(b));
      const VectorX<S> img = (*finv) * w;
      for (Index s = 0; s < n; ++s) out.c(a, b, s) = img(s);
    }
  if (alg.unity) {
    out.unity = alg.unity;
    if (!check_unity(out)) out.unity = std::nullopt;
  }
  return out;
}

template <class S>
bool is_idempotent(const AlgebraT<S>& alg, const VectorX<S>& x) {
  if (x.rows() != alg.dim) fail(Errc::DimensionMismatch, "is_idempotent: vector has wrong dimension");
  return alg.mul(x, x) == x;
}

/// Applies a 2-cochain to a pair of vectors.
template <class S>
VectorX<S> eval_bilinear(const CochainT<S>& c, const VectorX<S>& u, const VectorX<S>& v) {
  const Index n = c.dim;
  VectorX<S> w = VectorX<S>::Constant(n, S(0));
  for (Index i = 0; i < n; ++i) {
    if (u(i).is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (v(j).is_zero()) continue;
      const S f = u(i) * v(j);
      for (Index k = 0; k < n; ++k) w(k) += f * c.coeff(i * n + j, k);
    }
  }
  return w;
}

}  // namespace deformlab
