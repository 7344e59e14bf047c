#pragma once

#include <Eigen/Core>
#include <vector>

#include "deformlab/rational.hpp"

namespace deformlab {

using Index = Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

inline Index int_pow(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Row-major rank of a multi-index (i_0 is the most significant digit).
inline Index encode_multi(const std::vector<Index>& idx, Index n) {
  Index r = 0;
  for (Index i : idx) r = r * n + i;
  return r;
}

inline std::vector<Index> decode_multi(Index rank, Index n, int degree) {
  std::vector<Index> idx(static_cast<std::size_t>(degree));
  for (int p = degree - 1; p >= 0; --p) {
    idx[static_cast<std::size_t>(p)] = rank % n;
    rank /= n;
  }
  return idx;
}

template <class Scalar>
bool is_zero_matrix(const MatrixX<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace deformlab
