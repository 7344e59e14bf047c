#pragma once

#include <optional>
#include <vector>

#include "deformlab/dense.hpp"
#include "deformlab/error.hpp"

namespace deformlab {

// Exact dense elimination over a field scalar (Rational, RationalFn).
// Pivot choice is the first nonzero entry in column order, so every result
// is deterministic for a given input.

template <class S>
struct RowEchelon {
  MatrixX<S> rref;            // reduced row echelon form
  std::vector<Index> pivots;  // pivot column per pivot row
  Index rank = 0;
};

template <class S>
RowEchelon<S> row_echelon(MatrixX<S> a) {
  const Index rows = a.rows(), cols = a.cols();
  RowEchelon<S> out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const S inv_piv = S(1) / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv_piv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const S f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(a);
  return out;
}

template <class S>
Index rank(const MatrixX<S>& a) {
  return row_echelon<S>(a).rank;
}

/// Basis of { x : a x = 0 }, one column per free variable, in column order.
template <class S>
MatrixX<S> nullspace(const MatrixX<S>& a) {
  const auto ech = row_echelon<S>(a);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Index nfree = cols - ech.rank;
  MatrixX<S> basis = MatrixX<S>::Constant(cols, nfree, S(0));
  Index col = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, col) = S(1);
    for (Index r = 0; r < ech.rank; ++r) basis(ech.pivots[static_cast<std::size_t>(r)], col) = -ech.rref(r, f);
    ++col;
  }
  return basis;
}

/// Particular solution of a x = b with free variables set to zero.
template <class S>
std::optional<VectorX<S>> solve(const MatrixX<S>& a, const VectorX<S>& b) {
  if (a.rows() != b.rows()) fail(Errc::DimensionMismatch, "solve: shape mismatch");
  MatrixX<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = row_echelon<S>(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  VectorX<S> x = VectorX<S>::Constant(a.cols(), S(0));
  for (Index r = 0; r < ech.rank; ++r) x(ech.pivots[static_cast<std::size_t>(r)]) = ech.rref(r, a.cols());
  return x;
}

template <class S>
std::optional<MatrixX<S>> inverse(const MatrixX<S>& a) {
  if (a.rows() != a.cols()) fail(Errc::DimensionMismatch, "inverse: matrix not square");
  const Index n = a.rows();
  MatrixX<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<S>::Identity(n, n);
  const auto ech = row_echelon<S>(aug);
  if (ech.rank < n || ech.pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  return MatrixX<S>(ech.rref.rightCols(n));
}

template <class S>
S determinant(MatrixX<S> a) {
  if (a.rows() != a.cols()) fail(Errc::DimensionMismatch, "determinant: matrix not square");
  const Index n = a.rows();
  S det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i)
      if (!a(i, c).is_zero()) { p = i; break; }
    if (p < 0) return S(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const S inv_piv = S(1) / a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const S f = a(i, c) * inv_piv;
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Incremental row-space tracker: membership tests against the span of the
/// rows fed so far, and greedy completion of independent sets.
template <class S>
class RowSpace {
 public:
  explicit RowSpace(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Reduces v against the stored rows; returns the residual.
  VectorX<S> reduce(VectorX<S> v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v(pivot).is_zero()) continue;
      const S f = v(pivot);
      for (Index j = 0; j < dim_; ++j) v(j) -= f * row(j);
    }
    return v;
  }

  bool contains(const VectorX<S>& v) const {
    VectorX<S> r = reduce(v);
    for (Index j = 0; j < dim_; ++j)
      if (!r(j).is_zero()) return false;
    return true;
  }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(const VectorX<S>& v) {
    VectorX<S> r = reduce(v);
    Index pivot = -1;
    for (Index j = 0; j < dim_; ++j)
      if (!r(j).is_zero()) { pivot = j; break; }
    if (pivot < 0) return false;
    const S inv_piv = S(1) / r(pivot);
    for (Index j = 0; j < dim_; ++j) r(j) = r(j) * inv_piv;
    for (auto& [p, row] : rows_) {
      if (row(pivot).is_zero()) continue;
      const S f = row(pivot);
      for (Index j = 0; j < dim_; ++j) row(j) -= f * r(j);
    }
    rows_.emplace_back(pivot, std::move(r));
    return true;
  }

 private:
  Index dim_;
  std::vector<std::pair<Index, VectorX<S>>> rows_;
};

}  // namespace deformlab
