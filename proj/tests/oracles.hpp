#pragma once

// Test-side oracles, kept independent of the library code paths they check:
// the differential is implemented here by gathering entries (the library
// scatters), the associator by literal basis products, and the rank by a
// locally coded elimination.

#include <random>
#include <vector>

#include "deformlab/algebra.hpp"

namespace oracles {

using namespace deformlab;

/// (e_i e_j) e_k - e_i (e_j e_k) through explicit products.
inline RatVector associator_entry(const Algebra& alg, Index i, Index j, Index k) {
  const RatVector left = alg.mul(alg.mul(alg.basis_vector(i), alg.basis_vector(j)), alg.basis_vector(k));
  const RatVector right = alg.mul(alg.basis_vector(i), alg.mul(alg.basis_vector(j), alg.basis_vector(k)));
  return left - right;
}

inline bool is_associative_oracle(const Algebra& alg) {
  for (Index i = 0; i < alg.dim; ++i)
    for (Index j = 0; j < alg.dim; ++j)
      for (Index k = 0; k < alg.dim; ++k)
        if (!associator_entry(alg, i, j, k).isZero(0)) return false;
  return true;
}

/// Multilinear evaluation of a cochain on arbitrary vectors.
inline RatVector eval_cochain(const Cochain& c, const std::vector<RatVector>& args) {
  const Index n = c.dim;
  RatVector out = RatVector::Constant(n, Rational(0));
  for (Index row = 0; row < c.coeff.rows(); ++row) {
    const auto idx = decode_multi(row, n, c.degree);
    Rational f(1);
    for (int p = 0; p < c.degree; ++p) f *= args[static_cast<std::size_t>(p)](idx[static_cast<std::size_t>(p)]);
    if (f.is_zero()) continue;
    for (Index k = 0; k < n; ++k) out(k) += f * c.coeff(row, k);
  }
  return out;
}

/// Gather-style Hochschild differential, evaluated entry by entry.
inline Cochain delta_oracle(const Algebra& alg, const Cochain& phi) {
  const Index n = alg.dim;
  const int d = phi.degree;
  Cochain out = Cochain::zero(d + 1, n);
  for (Index row = 0; row < out.coeff.rows(); ++row) {
    const auto x = decode_multi(row, n, d + 1);
    std::vector<RatVector> args;
    for (Index xi : x) args.push_back(alg.basis_vector(xi));

    // mu(x_1, phi(x_2..x_{d+1}))
    RatVector acc = alg.mul(args[0], eval_cochain(phi, {args.begin() + 1, args.end()}));

    // alternating inner insertions of mu
    for (int i = 1; i <= d; ++i) {
      std::vector<RatVector> inner;
      for (int p = 0; p < i - 1; ++p) inner.push_back(args[static_cast<std::size_t>(p)]);
      inner.push_back(alg.mul(args[static_cast<std::size_t>(i - 1)], args[static_cast<std::size_t>(i)]));
      for (int p = i + 1; p <= d; ++p) inner.push_back(args[static_cast<std::size_t>(p)]);
      const RatVector term = eval_cochain(phi, inner);
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }

    // (-1)^{d+1} mu(phi(x_1..x_d), x_{d+1})
    const RatVector last = alg.mul(eval_cochain(phi, {args.begin(), args.end() - 1}), args.back());
    if ((d + 1) % 2 == 0)
      acc += last;
    else
      acc -= last;

    for (Index k = 0; k < n; ++k) out.coeff(row, k) = acc(k);
  }
  return out;
}

/// Plain Gaussian elimination rank, coded independently of linalg.hpp.
inline Index rank_oracle(RatMatrix m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index pivot = -1;
    for (Index i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(r));
    for (Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  Rational rational(int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 2);
    return Rational(num(gen), den(gen));
  }

  RatMatrix matrix(Index rows, Index cols) {
    RatMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = rational();
    return m;
  }

  RatMatrix invertible(Index n) {
    for (;;) {
      RatMatrix m = matrix(n, n);
      if (!determinant<Rational>(m).is_zero()) return m;
    }
  }

  RatMatrix singular(Index n) {
    for (;;) {
      RatMatrix m = matrix(n, n);
      std::uniform_int_distribution<Index> pick(0, n - 1);
      const Index victim = pick(gen);
      // Replace one row by a combination of the others.
      RatVector row = RatVector::Constant(n, Rational(0));
      for (Index i = 0; i < n; ++i) {
        if (i == victim) continue;
        const Rational f = rational(-1, 1);
        for (Index j = 0; j < n; ++j) row(j) += f * m(i, j);
      }
      for (Index j = 0; j < n; ++j) m(victim, j) = row(j);
      if (determinant<Rational>(m).is_zero()) return m;
    }
  }

  Cochain cochain(int degree, Index n) {
    Cochain c = Cochain::zero(degree, n);
    for (Index r = 0; r < c.coeff.rows(); ++r)
      for (Index k = 0; k < n; ++k) c.coeff(r, k) = rational(-2, 2);
    return c;
  }

  RatVector vector(Index n) {
    RatVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational();
    return v;
  }
};

}  // namespace oracles
