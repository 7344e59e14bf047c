#include <doctest.h>

#include "deformlab/degeneration.hpp"
#include "deformlab/hochschild.hpp"
#include "deformlab/variety.hpp"
#include "oracles.hpp"

using namespace deformlab;

TEST_CASE("derivation dimensions of the example algebras") {
  CHECK(derivation_dim(registry_algebra("a1")) == 0);
  CHECK(derivation_dim(registry_algebra("a0")) == 1);
  CHECK(derivation_dim(registry_algebra("k3")) == 0);
  CHECK(derivation_dim(registry_algebra("t2")) == 2);
  CHECK(derivation_dim(registry_algebra("kx3")) == 2);
  CHECK(derivation_dim(registry_algebra("m2")) == 3);
  // null algebras: anything fixing the unity direction, (n-1)^2 parameters
  CHECK(derivation_dim(registry_algebra("null3")) == 4);
  CHECK(derivation_dim(registry_algebra("null4")) == 9);

  // cross-route: derivations are exactly the 1-cocycles
  for (const RegistryEntry& e : registry()) {
    const Index n = e.algebra.dim;
    CHECK(derivation_dim(e.algebra) == n * n - rank<Rational>(delta_matrix(e.algebra, 1)));
  }
}

TEST_CASE("tangent dimensions and the orbit identity") {
  const auto [z_a1, b_a1] = tangent_dims(registry_algebra("a1"));
  CHECK(z_a1 == b_a1);  // H^2 = 0
  const auto [z_a0, b_a0] = tangent_dims(registry_algebra("a0"));
  CHECK(z_a0 - b_a0 == 1);
  CHECK(b_a0 <= z_a0);

  for (const RegistryEntry& e : registry()) {
    const Index n = e.algebra.dim;
    const auto [z, b] = tangent_dims(e.algebra);
    CHECK(b <= z);
    // the orbit tangent space B^2 has dimension n^2 - dim Der
    CHECK(b == n * n - derivation_dim(e.algebra));
  }
}

TEST_CASE("rigidity reports") {
  const RigidityReport r1 = rigidity_report(registry_algebra("a1"));
  CHECK(r1.algebraically_rigid);
  CHECK(r1.formally_rigid_via_h2);
  CHECK(r1.dim_h2 == 0);
  CHECK(r1.orbit_dim == 4);
  CHECK(r1.orbit_dim + r1.dim_der == 4);
  CHECK(r1.dim_b2 == r1.orbit_dim);  // open-orbit shadow: B^2 = Z^2 = orbit tangent
  CHECK(r1.dim_b2 == r1.dim_z2);

  const RigidityReport r0 = rigidity_report(registry_algebra("a0"));
  CHECK(!r0.algebraically_rigid);
  CHECK(!r0.formally_rigid_via_h2);
  CHECK(r0.dim_h2 == 1);
  CHECK(r0.dim_h2 == r0.dim_z2 - r0.dim_b2);
  CHECK(r0.orbit_dim + r0.dim_der == 4);
  REQUIRE(r0.sq_coboundary.size() == 1);
  CHECK(r0.sq_coboundary[0]);  // the square of the generator integrates

  const RigidityReport rm2 = rigidity_report(registry_algebra("m2"));
  CHECK(rm2.algebraically_rigid);
  CHECK(rm2.dim_h3 == 0);

  Algebra bad = make_algebra<Rational>(2);
  bad.c(1, 1, 0) = Rational(1);
  bad.c(0, 1, 1) = Rational(1);
  CHECK_THROWS_AS(rigidity_report(bad), Error);
}

TEST_CASE("census invariants are basis-change invariant") {
  oracles::Rng rng(61);
  for (const char* id : {"a0", "a1", "t2"}) {
    const Algebra& alg = registry_algebra(id);
    const Index der = derivation_dim(alg);
    const auto [z, b] = tangent_dims(alg);
    const Index idem = idempotent_search(alg).independent_count;
    for (int trial = 0; trial < 3; ++trial) {
      const Algebra moved = apply_basis_change(rng.invertible(alg.dim), alg);
      CHECK(is_associative(moved));
      CHECK(derivation_dim(moved) == der);
      CHECK(tangent_dims(moved) == std::pair(z, b));
      CHECK(idempotent_search(moved).independent_count == idem);
    }
  }
}

TEST_CASE("idempotent search on the dimension-2 classes") {
  const IdempotentSearch a1 = idempotent_search(registry_algebra("a1"));
  CHECK(a1.independent_count == 2);
  // finds 0, e0, e1 and e0 - e1
  CHECK(a1.idempotents.size() == 4);
  bool found_diff = false;
  for (const RatVector& x : a1.idempotents)
    if (x(0) == Rational(1) && x(1) == Rational(-1)) found_diff = true;
  CHECK(found_diff);

  const IdempotentSearch a0 = idempotent_search(registry_algebra("a0"));
  CHECK(a0.independent_count == 1);
  CHECK(a0.idempotents.size() == 2);  // 0 and the unity only

  // a null product without unity admits only the zero idempotent
  const Algebra zero = make_algebra<Rational>(2);
  const IdempotentSearch z = idempotent_search(zero);
  CHECK(z.idempotents.size() == 1);
  CHECK(z.independent_count == 0);
}

TEST_CASE("idempotent search on larger algebras") {
  const IdempotentSearch m2 = idempotent_search(registry_algebra("m2"));
  CHECK(m2.independent_count >= 2);
  bool found_half = false;  // the projection (1 + h)/2
  for (const RatVector& x : m2.idempotents)
    if (x(0) == Rational(1, 2) && x(1) == Rational(1, 2) && x(2).is_zero() && x(3).is_zero())
      found_half = true;
  CHECK(found_half);

  const IdempotentSearch k3 = idempotent_search(registry_algebra("k3"));
  CHECK(k3.independent_count == 3);
}

TEST_CASE("idempotent continuation through the canonical a0 family") {
  Cochain mu1 = Cochain::zero(2, 2);
  mu1.coeff(3, 1) = Rational(1);
  const FormalDeformation def{registry_algebra("a0"), {mu1}};

  // the unity continues; the identity already holds exactly per order
  const auto series = idempotent_continuation(def, registry_algebra("a0").basis_vector(0), 3);
  CHECK(series.size() == 4);
  for (int k = 0; k <= 3; ++k) {
    RatVector total = RatVector::Constant(2, Rational(0));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b)
        total += eval_bilinear(def.term(a), series[static_cast<std::size_t>(b)],
                               series[static_cast<std::size_t>(k - a - b)]);
    CHECK(total == series[static_cast<std::size_t>(k)]);
  }

  // the zero idempotent continues trivially
  const auto zero_series = idempotent_continuation(def, RatVector::Constant(2, Rational(0)), 3);
  for (const RatVector& x : zero_series) CHECK(x.isZero(0));

  // a trivial deformation keeps the idempotent constant
  const auto constant = idempotent_continuation({registry_algebra("a1"), {Cochain::zero(2, 2)}},
                                                registry_algebra("a1").basis_vector(1), 2);
  CHECK(constant[0] == registry_algebra("a1").basis_vector(1));
  CHECK(constant[1].isZero(0));
  CHECK(constant[2].isZero(0));

  // non-idempotent start is rejected
  CHECK_THROWS_AS(idempotent_continuation(def, registry_algebra("a0").basis_vector(1), 2), Error);
}

TEST_CASE("idempotent continuation reports singular linearizations") {
  // Over the 2x2 matrix algebra the linearization at the projection
  // (1 + h)/2 kills e and f, so the order-by-order solve is not unique.
  const Algebra& m2 = registry_algebra("m2");
  RatVector proj(4);
  proj << Rational(1, 2), Rational(1, 2), Rational(0), Rational(0);
  REQUIRE(is_idempotent(m2, proj));
  const FormalDeformation trivial{m2, {Cochain::zero(2, 4)}};
  CHECK_THROWS_AS(idempotent_continuation(trivial, proj, 1), Error);
}

TEST_CASE("the quantum plane family is associative for every parameter") {
  oracles::Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const Algebra alg = quantum_plane_family(rng.rational(-6, 6));
    CHECK(associator(alg).is_zero());
    CHECK(check_unity(alg));
  }

  // symbolically: with t itself as the parameter the associator vanishes
  AlgebraT<Poly> sym = make_algebra<Poly>(4);
  const Algebra at_zero = quantum_plane_family(Rational(0));
  for (Index r = 0; r < 16; ++r)
    for (Index s = 0; s < 4; ++s) sym.structure(r, s) = Poly(at_zero.structure(r, s));
  sym.structure(2 * 4 + 1, 3) = Poly::t();  // y * x = t * xy
  CHECK(associator(sym).is_zero());

  CHECK(quantum_plane_family(Rational(0)) == registry_algebra("qp0"));
  const Algebra commutative = quantum_plane_family(Rational(1));
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      for (Index k = 0; k < 4; ++k) CHECK(commutative.c(i, j, k) == commutative.c(j, i, k));
}

TEST_CASE("quantum plane members at t0 and 1/t0 share invariants") {
  for (const Rational& t0 : {Rational(2), Rational(3), Rational(-5)}) {
    const Algebra a = quantum_plane_family(t0);
    const Algebra b = quantum_plane_family(Rational(1) / t0);
    CHECK(derivation_dim(a) == derivation_dim(b));
    CHECK(tangent_dims(a) == tangent_dims(b));
    CHECK(idempotent_search(a).independent_count == idempotent_search(b).independent_count);
  }
}

TEST_CASE("dimension-2 census") {
  const Census census = census_dim2();
  REQUIRE(census.entries.size() == 2);
  CHECK(census.component_count == 1);
  CHECK(census.rigid_count == 1);
  CHECK(census.degeneration_verified);

  const CensusEntry& a0 = census.entries[0];
  CHECK(a0.id == "a0");
  CHECK(a0.dim_der == 1);
  CHECK(a0.dim_h2 == 1);
  CHECK(a0.idempotent_count == 1);
  CHECK(a0.associative);
  CHECK(a0.unital);
  CHECK(!a0.rigid);

  const CensusEntry& a1 = census.entries[1];
  CHECK(a1.id == "a1");
  CHECK(a1.dim_der == 0);
  CHECK(a1.dim_h2 == 0);
  CHECK(a1.idempotent_count == 2);
  CHECK(a1.rigid);

  // the witness deformation of a0 is valid and genuinely nontrivial
  const FormalDeformation& witness = census.nontrivial_deformation_of_a0;
  CHECK(check_deformation_equation(witness, 1).all_ok);
  CHECK(!witness.terms[0].is_zero());
  CHECK(!is_coboundary(witness.base, witness.terms[0]).has_value());
}
