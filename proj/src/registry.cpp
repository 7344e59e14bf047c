#include "deformlab/registry.hpp"

namespace deformlab {

namespace {

Algebra with_unity_products(Index n) { return null_algebra<Rational>(n); }

}  // namespace

Algebra algebra_a0() { return with_unity_products(2); }

Algebra algebra_a1() {
  Algebra a = with_unity_products(2);
  a.c(1, 1, 1) = Rational(1);
  return a;
}

Algebra algebra_kx3() {
  Algebra a = with_unity_products(3);
  a.c(1, 1, 2) = Rational(1);  // x * x = x^2, all higher products vanish
  return a;
}

Algebra algebra_t2() {
  Algebra a = with_unity_products(3);
  a.c(1, 1, 1) = Rational(1);  // E11 * E11 = E11
  a.c(1, 2, 2) = Rational(1);  // E11 * E12 = E12, E12 * E11 = 0
  return a;
}

Algebra algebra_k3() {
  Algebra a = with_unity_products(3);
  a.c(1, 1, 1) = Rational(1);
  a.c(2, 2, 2) = Rational(1);
  return a;
}

Algebra algebra_m2() {
  Algebra a = with_unity_products(4);
  const Rational one(1), half(1, 2);
  a.c(1, 1, 0) = one;   // h*h = 1
  a.c(1, 2, 2) = one;   // h*e = e
  a.c(2, 1, 2) = -one;  // e*h = -e
  a.c(1, 3, 3) = -one;  // h*f = -f
  a.c(3, 1, 3) = one;   // f*h = f
  a.c(2, 3, 0) = half;  // e*f = (1 + h)/2
  a.c(2, 3, 1) = half;
  a.c(3, 2, 0) = half;  // f*e = (1 - h)/2
  a.c(3, 2, 1) = -half;
  return a;
}

Algebra quantum_plane_family(const Rational& t0) {
  Algebra a = with_unity_products(4);
  a.c(1, 2, 3) = Rational(1);  // x * y = xy
  a.c(2, 1, 3) = t0;           // y * x = t0 * xy
  return a;
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> v;
    v.push_back({"a0", "dim 2: unity e0, e1^2 = 0 (K[x]/(x^2))", algebra_a0()});
    v.push_back({"a1", "dim 2: unity e0, e1^2 = e1 (K x K)", algebra_a1()});
    v.push_back({"k3", "dim 3: K x K x K", algebra_k3()});
    v.push_back({"t2", "dim 3: upper triangular 2x2 matrices", algebra_t2()});
    v.push_back({"kx3", "dim 3: K[x]/(x^3)", algebra_kx3()});
    v.push_back({"null3", "dim 3: null algebra", null_algebra<Rational>(3)});
    v.push_back({"m2", "dim 4: full 2x2 matrix algebra", algebra_m2()});
    v.push_back({"qp0", "dim 4: quantum plane family at t0 = 0", quantum_plane_family(Rational(0))});
    v.push_back({"qp1", "dim 4: quantum plane family at t0 = 1", quantum_plane_family(Rational(1))});
    v.push_back({"null4", "dim 4: null algebra", null_algebra<Rational>(4)});
    return v;
  }();
  return entries;
}

const Algebra& registry_algebra(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e.algebra;
  fail(Errc::InvalidArgument, "unknown registry algebra '" + id + "'");
}

}  // namespace deformlab
