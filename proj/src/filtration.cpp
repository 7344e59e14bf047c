#include "deformlab/filtration.hpp"

#include <string>

namespace deformlab {

namespace {

struct AdaptedData {
  AdaptedBasis adapted;
  RatMatrix inverse_basis;
  MatrixX<Rational> gamma;  // structure constants in the adapted basis
  int top_level = 0;
};

/// Structure constants in the adapted basis plus the multiplicativity check:
/// gamma[(a,b) -> c] must vanish whenever level(c) > level(a) + level(b) and
/// level(a) + level(b) < r.
AdaptedData prepare(const Algebra& alg, const Filtration& filt) {
  const Index n = alg.dim;
  if (filt.steps.empty()) fail(Errc::InvalidArgument, "filtration must have at least one step");

  AdaptedData data;
  data.top_level = static_cast<int>(filt.steps.size()) - 1;

  RowSpace<Rational> span(n);
  RatMatrix basis = RatMatrix::Constant(n, n, Rational(0));
  std::vector<int> levels;
  Index col = 0;
  Index prev_rank = 0;
  for (std::size_t p = 0; p < filt.steps.size(); ++p) {
    const RatMatrix& step = filt.steps[p];
    if (step.rows() != n) fail(Errc::DimensionMismatch, "filtration step has wrong ambient dimension");
    for (Index c = 0; c < step.cols(); ++c) {
      if (!span.insert(step.col(c))) continue;
      basis.col(col) = step.col(c);
      levels.push_back(static_cast<int>(p));
      ++col;
    }
    if (span.rank() <= prev_rank)
      fail(Errc::InvalidArgument, "filtration steps must strictly increase");
    prev_rank = span.rank();
  }
  if (col != n) fail(Errc::InvalidArgument, "last filtration step must span the whole space");

  data.adapted.basis = basis;
  data.adapted.levels = std::move(levels);
  const auto inv = inverse<Rational>(basis);
  data.inverse_basis = *inv;  // spans were checked independent, so invertible

  data.gamma = MatrixX<Rational>::Constant(n * n, n, Rational(0));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const RatVector w = data.inverse_basis * alg.mul(basis.col(a), basis.col(b));
      for (Index c = 0; c < n; ++c) data.gamma(a * n + b, c) = w(c);
    }

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const int lab = data.adapted.levels[static_cast<std::size_t>(a)] +
                      data.adapted.levels[static_cast<std::size_t>(b)];
      if (lab >= data.top_level) continue;  // A_s = V for s >= r, no constraint
      for (Index c = 0; c < n; ++c)
        if (data.adapted.levels[static_cast<std::size_t>(c)] > lab && !data.gamma(a * n + b, c).is_zero())
          fail(Errc::NotMultiplicative,
               "mu(A_" + std::to_string(data.adapted.levels[static_cast<std::size_t>(a)]) + ", A_" +
                   std::to_string(data.adapted.levels[static_cast<std::size_t>(b)]) +
                   ") leaves A_" + std::to_string(lab));
    }
  return data;
}

Algebra fiber_from(const AdaptedData& data, Index n, const Rational& lambda) {
  Algebra out = make_algebra<Rational>(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const int lab = data.adapted.levels[static_cast<std::size_t>(a)] +
                      data.adapted.levels[static_cast<std::size_t>(b)];
      for (Index c = 0; c < n; ++c) {
        const Rational& g = data.gamma(a * n + b, c);
        if (g.is_zero()) continue;
        const int exp = lab - data.adapted.levels[static_cast<std::size_t>(c)];
        // exp >= 0: for lab < r by multiplicativity, for lab >= r because
        // levels never exceed r.
        if (lambda.is_zero())
          out.c(a, b, c) = (exp == 0) ? g : Rational(0);
        else
          out.c(a, b, c) = g * pow(lambda, exp);
      }
    }
  out.unity = detect_unity(out);
  return out;
}

}  // namespace

AdaptedBasis adapted_basis(const Algebra& alg, const Filtration& filt) {
  return prepare(alg, filt).adapted;
}

Algebra graded_algebra(const Algebra& alg, const Filtration& filt) {
  return rees_fiber(alg, filt, Rational(0));
}

Algebra rees_fiber(const Algebra& alg, const Filtration& filt, const Rational& lambda) {
  const AdaptedData data = prepare(alg, filt);
  return fiber_from(data, alg.dim, lambda);
}

}  // namespace deformlab
