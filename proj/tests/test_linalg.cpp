#include <doctest.h>

#include "deformlab/linalg.hpp"
#include "oracles.hpp"

using namespace deformlab;

namespace {

RatMatrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  RatMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rank matches the oracle on random matrices") {
  oracles::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const RatMatrix m = rng.matrix(5, 4);
    CHECK(rank<Rational>(m) == oracles::rank_oracle(m));
  }
  CHECK(rank<Rational>(from_ints({{1, 2}, {2, 4}})) == 1);
  CHECK(rank<Rational>(RatMatrix::Constant(3, 3, Rational(0))) == 0);
}

TEST_CASE("nullspace vectors are exact kernel elements") {
  oracles::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix m = rng.matrix(4, 6);
    const RatMatrix ns = nullspace<Rational>(m);
    CHECK(ns.cols() == 6 - rank<Rational>(m));
    const RatMatrix prod = m * ns;
    CHECK(is_zero_matrix(prod));
    CHECK(rank<Rational>(ns) == ns.cols());
  }
}

TEST_CASE("solve returns exact particular solutions and detects inconsistency") {
  oracles::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix m = rng.matrix(4, 3);
    const RatVector x0 = rng.vector(3);
    const RatVector b = m * x0;
    const auto x = solve<Rational>(m, b);
    REQUIRE(x.has_value());
    CHECK(RatVector(m * *x) == b);
  }
  // x + y = 1 and x + y = 2 cannot both hold
  const RatMatrix m = from_ints({{1, 1}, {1, 1}});
  RatVector b(2);
  b << Rational(1), Rational(2);
  CHECK(!solve<Rational>(m, b).has_value());
}

TEST_CASE("inverse and determinant") {
  oracles::Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const RatMatrix m = rng.invertible(3);
    const auto inv = inverse<Rational>(m);
    REQUIRE(inv.has_value());
    CHECK(RatMatrix(m * *inv) == RatMatrix::Identity(3, 3));
    CHECK(!determinant<Rational>(m).is_zero());
  }
  for (int trial = 0; trial < 10; ++trial) {
    const RatMatrix m = rng.singular(3);
    CHECK(!inverse<Rational>(m).has_value());
    CHECK(determinant<Rational>(m).is_zero());
  }
  CHECK(determinant<Rational>(from_ints({{2, 1}, {1, 1}})) == Rational(1));
  CHECK(determinant<Rational>(from_ints({{0, 1}, {1, 0}})) == Rational(-1));
}

TEST_CASE("row space membership and completion") {
  RowSpace<Rational> span(3);
  RatVector v1(3), v2(3), v3(3);
  v1 << Rational(1), Rational(1), Rational(0);
  v2 << Rational(0), Rational(1), Rational(1);
  v3 << Rational(1), Rational(2), Rational(1);  // v1 + v2
  CHECK(span.insert(v1));
  CHECK(span.insert(v2));
  CHECK(!span.insert(v3));
  CHECK(span.contains(v3));
  CHECK(span.rank() == 2);
  RatVector out(3);
  out << Rational(1), Rational(0), Rational(0);
  CHECK(!span.contains(out));
}
