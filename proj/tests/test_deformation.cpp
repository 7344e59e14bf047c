#include <doctest.h>

#include "deformlab/deformation.hpp"
#include "deformlab/registry.hpp"
#include "oracles.hpp"

using namespace deformlab;

namespace {

/// mu_1(e1, e1) = e1 over a0: the classical one-parameter family on dim 2.
FormalDeformation canonical_a0_deformation() {
  Cochain mu1 = Cochain::zero(2, 2);
  mu1.coeff(3, 1) = Rational(1);
  return {registry_algebra("a0"), {mu1}};
}

FormalDeformation random_trivializable(oracles::Rng& rng, const Algebra& alg, int order) {
  FormalIsomorphism f;
  f.dim = alg.dim;
  for (int k = 0; k < order; ++k) f.terms.push_back(rng.matrix(alg.dim, alg.dim));
  return apply_isomorphism(f, FormalDeformation{alg, {}}, order);
}

}  // namespace

TEST_CASE("deformation equation on the canonical family over a0") {
  const FormalDeformation def = canonical_a0_deformation();
  const DeformationCheck chk = check_deformation_equation(def, 3);
  CHECK(chk.all_ok);
  CHECK(chk.orders.size() == 4);
  for (const OrderCheck& oc : chk.orders) {
    CHECK(oc.circle_ok);
    CHECK(oc.direct_ok);
  }
}

TEST_CASE("deformation equation edge cases") {
  // all terms zero: passes exactly when the base associates
  CHECK(check_deformation_equation({registry_algebra("m2"), {}}).all_ok);
  Algebra bad = make_algebra<Rational>(2);
  bad.c(1, 1, 0) = Rational(1);
  bad.c(0, 1, 1) = Rational(1);
  const DeformationCheck chk = check_deformation_equation({bad, {}});
  CHECK(!chk.all_ok);
  CHECK(!chk.orders[0].circle_ok);

  // a term that is not a 2-cocycle fails at order 1
  Cochain not_cocycle = Cochain::zero(2, 2);
  not_cocycle.coeff(1, 0) = Rational(1);  // phi(e0, e1) = e0 over a0
  const DeformationCheck chk1 = check_deformation_equation({registry_algebra("a0"), {not_cocycle}});
  CHECK(chk1.orders[0].circle_ok);
  CHECK(!chk1.orders[1].circle_ok);
  CHECK(!chk1.all_ok);
}

TEST_CASE("infinitesimal picks the first nonzero term and is a cocycle") {
  const auto [p, mu] = infinitesimal(canonical_a0_deformation());
  CHECK(p == 1);
  CHECK(mu.coeff(3, 1) == Rational(1));

  FormalDeformation shifted{registry_algebra("a0"),
                            {Cochain::zero(2, 2), canonical_a0_deformation().terms[0]}};
  CHECK(infinitesimal(shifted).first == 2);

  CHECK_THROWS_AS(infinitesimal({registry_algebra("a0"), {}}), Error);
  CHECK_THROWS_AS(infinitesimal({registry_algebra("a0"), {Cochain::zero(2, 2)}}), Error);
}

TEST_CASE("obstruction at successive orders of the canonical family") {
  const FormalDeformation def = canonical_a0_deformation();

  // m = 1: the empty sum; every 2-cocycle extends order zero.
  const Obstruction ob1 = obstruction(def, 1);
  CHECK(ob1.omega.is_zero());
  CHECK(ob1.solvable);
  CHECK(ob1.particular->is_zero());
  CHECK(ob1.kernel.size() == 4);  // dim Z^2(a0)

  // m = 2: omega = mu_1 o mu_1 vanishes identically here.
  const Obstruction ob2 = obstruction(def, 2);
  CHECK(ob2.omega.is_zero());
  CHECK(ob2.solvable);

  // prefix violations are rejected
  Cochain junk = Cochain::zero(2, 2);
  junk.coeff(1, 0) = Rational(1);
  CHECK_THROWS_AS(obstruction({registry_algebra("a0"), {junk}}, 2), Error);
}

TEST_CASE("extend the canonical family to order 3") {
  const auto result = extend(canonical_a0_deformation(), 3);
  REQUIRE(std::holds_alternative<FormalDeformation>(result));
  const FormalDeformation& ext = std::get<FormalDeformation>(result);
  CHECK(ext.order() == 3);
  CHECK(ext.term(2).is_zero());
  CHECK(ext.term(3).is_zero());
  CHECK(check_deformation_equation(ext, 3).all_ok);
}

TEST_CASE("extend never fails over a base with vanishing H^3") {
  const Algebra& t2 = registry_algebra("t2");
  const auto [z3, b3] = cohomology_dims(t2, 3);
  REQUIRE(z3 == b3);  // H^3 = 0
  const RatMatrix z2 = nullspace<Rational>(delta_matrix(t2, 2));
  oracles::Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    RatVector coeffs(z2.cols());
    for (Index i = 0; i < z2.cols(); ++i) coeffs(i) = rng.rational(-2, 2);
    const Cochain inf = vec_to_cochain(z2 * coeffs, 2, 3);
    const auto result = extend(FormalDeformation{t2, {inf}}, 4);
    REQUIRE(std::holds_alternative<FormalDeformation>(result));
    CHECK(check_deformation_equation(std::get<FormalDeformation>(result), 4).all_ok);
  }
}

TEST_CASE("apply_isomorphism basics") {
  const FormalDeformation def = canonical_a0_deformation();
  const FormalIsomorphism id{2, {}};
  CHECK(apply_isomorphism(id, def).terms[0] == def.terms[0]);

  // Id + t f on the trivial deformation produces mu_1 = coboundary(f).
  oracles::Rng rng(42);
  const Algebra& a0 = registry_algebra("a0");
  for (int trial = 0; trial < 5; ++trial) {
    const RatMatrix f = rng.matrix(2, 2);
    const FormalDeformation moved = apply_isomorphism({2, {f}}, FormalDeformation{a0, {}}, 1);
    Cochain fc = Cochain::zero(1, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) fc.coeff(j, i) = f(i, j);
    CHECK(moved.terms[0] == coboundary(a0, fc));
  }
}

TEST_CASE("isomorphism round trips and composition") {
  oracles::Rng rng(43);
  const FormalDeformation def = canonical_a0_deformation();
  for (int trial = 0; trial < 5; ++trial) {
    FormalIsomorphism f{2, {rng.matrix(2, 2), rng.matrix(2, 2)}};
    FormalIsomorphism g{2, {rng.matrix(2, 2)}};

    // series inverse
    const FormalIsomorphism finv = inverse_isomorphism(f, 3);
    const FormalIsomorphism both = compose_isomorphisms(f, finv, 3);
    for (int k = 1; k <= 3; ++k) CHECK(is_zero_matrix(MatrixX<Rational>(both.term(k))));

    // apply then apply-inverse returns the input
    const FormalDeformation there = apply_isomorphism(f, def, 3);
    const FormalDeformation back = apply_isomorphism(finv, there, 3);
    for (int k = 1; k <= 3; ++k) CHECK(back.term(k) == def.term(k));

    // sequential application matches composition
    const FormalDeformation seq = apply_isomorphism(g, apply_isomorphism(f, def, 3), 3);
    const FormalDeformation once = apply_isomorphism(compose_isomorphisms(f, g, 3), def, 3);
    for (int k = 1; k <= 3; ++k) CHECK(seq.term(k) == once.term(k));
  }
}

TEST_CASE("apply_isomorphism preserves the deformation equation") {
  oracles::Rng rng(44);
  const auto ext = std::get<FormalDeformation>(extend(canonical_a0_deformation(), 3));
  for (int trial = 0; trial < 3; ++trial) {
    FormalIsomorphism f{2, {rng.matrix(2, 2), rng.matrix(2, 2)}};
    const FormalDeformation moved = apply_isomorphism(f, ext, 3);
    CHECK(check_deformation_equation(moved, 3).all_ok);
  }
}

TEST_CASE("trivialize: coboundary directions die, the a0 family obstructs at order 2") {
  oracles::Rng rng(45);
  const Algebra& a0 = registry_algebra("a0");

  // deformations manufactured from isomorphisms trivialize completely
  for (int trial = 0; trial < 3; ++trial) {
    const FormalDeformation def = random_trivializable(rng, a0, 3);
    const TrivializeResult r = trivialize(def, 3);
    REQUIRE(r.iso.has_value());
    const FormalDeformation fixed = apply_isomorphism(*r.iso, def, 3);
    for (int k = 1; k <= 3; ++k) CHECK(fixed.term(k).is_zero());
  }

  // the canonical family: its first term is a coboundary, so order 1 can be
  // straightened, but the normalized order-2 term (e1, e1) -> e0 / 4 cannot.
  const FormalDeformation def = canonical_a0_deformation();
  const TrivializeResult shallow = trivialize(def, 1);
  CHECK(shallow.iso.has_value());

  const TrivializeResult deep = trivialize(def, 3);
  REQUIRE(deep.obstruction.has_value());
  CHECK(deep.obstruction->order == 2);
  Cochain expected = Cochain::zero(2, 2);
  expected.coeff(3, 0) = Rational(1, 4);
  CHECK(deep.obstruction->residual == expected);
  CHECK(!is_coboundary(a0, deep.obstruction->residual).has_value());
}

TEST_CASE("trivialize always succeeds over a base with H^2 = 0") {
  oracles::Rng rng(46);
  for (const char* id : {"a1", "k3"}) {
    const Algebra& alg = registry_algebra(id);
    REQUIRE(cohomology(alg, 2).dim_h == 0);
    for (int trial = 0; trial < 3; ++trial) {
      const FormalDeformation def = random_trivializable(rng, alg, 2);
      CHECK(trivialize(def, 2).iso.has_value());
    }
  }
}

TEST_CASE("universal infinitesimal bases") {
  const InfinitesimalBase triv = universal_infinitesimal(registry_algebra("a1"));
  CHECK(triv.dim_h2() == 0);
  CHECK(triv.base_ring().dim == 1);

  const InfinitesimalBase base = universal_infinitesimal(registry_algebra("a0"));
  CHECK(base.dim_h2() == 1);
  const Algebra ring = base.base_ring();
  CHECK(ring.dim == 2);
  CHECK(check_unity(ring));
  // the maximal ideal squares to zero
  for (Index i = 1; i < ring.dim; ++i)
    for (Index j = 1; j < ring.dim; ++j)
      for (Index k = 0; k < ring.dim; ++k) CHECK(ring.c(i, j, k).is_zero());

  // every representative direction satisfies the order-1 equation
  for (const Cochain& rep : base.representatives)
    CHECK(check_deformation_equation({base.algebra, {rep}}, 1).all_ok);
}

TEST_CASE("push-out to one-parameter deformations") {
  const InfinitesimalBase base = universal_infinitesimal(registry_algebra("a0"));

  const FormalDeformation zero = push_out_infinitesimal(base, {Rational(0)});
  CHECK(zero.terms[0].is_zero());

  const FormalDeformation pushed = push_out_infinitesimal(base, {Rational(1)});
  CHECK(pushed.terms[0] == base.representatives[0]);
  CHECK(check_deformation_equation(pushed, 1).all_ok);

  const FormalDeformation again = push_out_infinitesimal(base, {Rational(1)});
  CHECK(again.terms[0] == pushed.terms[0]);  // same coefficients, same output

  CHECK_THROWS_AS(push_out_infinitesimal(base, {}), Error);
}

TEST_CASE("every order-1 deformation arises from the universal base up to equivalence") {
  // Over a0: an arbitrary 2-cocycle splits as c * rep + coboundary, so the
  // push-out with the right coefficient differs from it by a trivializable
  // direction at order 1.
  const Algebra& a0 = registry_algebra("a0");
  const InfinitesimalBase base = universal_infinitesimal(a0);
  oracles::Rng rng(47);
  const RatMatrix d1 = delta_matrix(a0, 1);
  RatMatrix aug(d1.rows(), d1.cols() + 1);
  aug.leftCols(d1.cols()) = d1;
  aug.col(d1.cols()) = cochain_to_vec(base.representatives[0]);
  const RatMatrix z2 = nullspace<Rational>(delta_matrix(a0, 2));
  for (int trial = 0; trial < 5; ++trial) {
    RatVector coeffs(z2.cols());
    for (Index i = 0; i < z2.cols(); ++i) coeffs(i) = rng.rational();
    const Cochain z = vec_to_cochain(z2 * coeffs, 2, 2);
    // the class coefficient c with z - c * rep a coboundary, solved exactly
    const auto x = solve<Rational>(aug, cochain_to_vec(z));
    REQUIRE(x.has_value());
    const Rational c = (*x)(d1.cols());
    Cochain diff = z;
    diff.coeff -= c * base.representatives[0].coeff;
    CHECK(is_coboundary(a0, diff).has_value());
    // so z = (push-out with coefficient c) + coboundary: equivalent at order 1
    Cochain sum = push_out_infinitesimal(base, {c}).terms[0];
    sum.coeff += diff.coeff;
    CHECK(sum == z);
    CHECK(trivialize(FormalDeformation{a0, {diff}}, 1).iso.has_value());
  }
}

TEST_CASE("compatibility of deformation directions") {
  const Algebra& a0 = registry_algebra("a0");
  const Cochain rep = universal_infinitesimal(a0).representatives[0];
  CHECK(compatible_classes(a0, rep, rep));
  CHECK(compatible_classes(a0, rep, Cochain::zero(2, 2)));

  // vanishing H^3 makes every pair compatible
  const Algebra& t2 = registry_algebra("t2");
  const RatMatrix z2 = nullspace<Rational>(delta_matrix(t2, 2));
  oracles::Rng rng(48);
  for (int trial = 0; trial < 5; ++trial) {
    RatVector c1(z2.cols()), c2(z2.cols());
    for (Index i = 0; i < z2.cols(); ++i) {
      c1(i) = rng.rational(-2, 2);
      c2(i) = rng.rational(-2, 2);
    }
    CHECK(compatible_classes(t2, vec_to_cochain(z2 * c1, 2, 3), vec_to_cochain(z2 * c2, 2, 3)));
  }

  Cochain junk = Cochain::zero(2, 2);
  junk.coeff(1, 0) = Rational(1);
  CHECK_THROWS_AS(compatible_classes(a0, junk, rep), Error);
}
