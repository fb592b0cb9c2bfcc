#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opal/closure.hpp"
#include "opal/stdrad.hpp"
#include "oracles.hpp"

using namespace opal;

namespace {

RingPtr nonreduced_ring() { return PresentedRing::make(Field::rationals(), {"x", "y", "z"}, {"x^2", "x*y"}); }

}  // namespace

TEST_CASE("associated primes of the relation ideal") {
  auto R = nonreduced_ring();
  RelationPrimes assJ = relation_associated_primes(R);
  REQUIRE(assJ.verified);
  REQUIRE(assJ.primes.size() == 2);
  CHECK(assJ.primes[0] == R->ideal({"x"}));
  CHECK(assJ.primes[1] == R->ideal({"x", "y"}));

  auto S = PresentedRing::make(Field::rationals(), {"x", "y"});
  RelationPrimes zero = relation_associated_primes(S);
  REQUIRE(zero.verified);
  REQUIRE(zero.primes.size() == 1);
  CHECK(zero.primes[0].is_zero());

  auto NonMono = PresentedRing::make(Field::rationals(), {"x", "y"}, {"x^2 - y^3"});
  CHECK(!relation_associated_primes(NonMono).verified);
}

TEST_CASE("component classification over a ring with zero-divisors") {
  auto R = nonreduced_ring();
  RelationPrimes assJ = relation_associated_primes(R);

  ComponentClassification zd = classify_component(R->ideal({"x", "y"}), assJ);
  CHECK(zd.kind == ComponentClassification::Kind::all_zero_divisors);
  REQUIRE(zd.containing_prime.has_value());
  CHECK(*zd.containing_prime == R->ideal({"x", "y"}));

  ComponentClassification reg = classify_component(R->ideal({"x", "z"}), assJ);
  CHECK(reg.kind == ComponentClassification::Kind::contains_regular);
  REQUIRE(reg.regular_witness.has_value());
  CHECK(reg.regular_witness->to_string() == "z");

  // in a domain every nonzero ideal contains a regular element
  auto S = PresentedRing::make(Field::rationals(), {"x", "y"});
  ComponentClassification dom = classify_component(S->ideal({"x"}), relation_associated_primes(S));
  CHECK(dom.kind == ComponentClassification::Kind::contains_regular);

  RelationPrimes unverified;
  unverified.primes.push_back(R->ideal({"x"}));
  CHECK_THROWS_AS(classify_component(R->ideal({"x"}), unverified), Error);
}

TEST_CASE("standardized radical of a radical ideal made of zero-divisors") {
  auto R = nonreduced_ring();
  StandardizedRadicalResult full = standardized_radical_full(R->ideal({"x", "y*z"}));
  CHECK(full.result == R->ideal({"x", "y"}));
  CHECK(!full.any_assumed);
  REQUIRE(full.classifications.size() == 2);
  CHECK(full.classifications[0].kind == ComponentClassification::Kind::all_zero_divisors);
  CHECK(full.classifications[1].kind == ComponentClassification::Kind::contains_regular);
  CHECK(full.classifications[1].regular_witness->to_string() == "z");
  REQUIRE(full.decomposition.components.size() == 2);
  CHECK(full.decomposition.components[0].primary == R->ideal({"x", "y"}));
  CHECK(full.decomposition.components[1].primary == R->ideal({"x", "z"}));
}

TEST_CASE("standardized radical of a primary all-zero-divisor ideal") {
  auto R = nonreduced_ring();
  CHECK(standardized_radical(R->ideal({"x", "y"})) == R->ideal({"x", "y"}));
}

TEST_CASE("standardized radical blows up in a domain") {
  auto S = PresentedRing::make(Field::rationals(), {"x", "y"});
  CHECK(standardized_radical(S->ideal({"x"})).is_unit());
  CHECK(standardized_radical(S->ideal({"x^2", "x*y"})).is_unit());
  CHECK(standardized_radical(S->zero_ideal()).is_zero());
  CHECK(standardized_radical(S->unit_ideal()).is_unit());
}

TEST_CASE("user-supplied decompositions are verified") {
  auto R = nonreduced_ring();
  Ideal I = R->ideal({"x", "y*z"});

  PrimaryDecomposition good = verify_decomposition(
      I, {{R->ideal({"x", "y"}), R->ideal({"x", "y"})}, {R->ideal({"x", "z"}), R->ideal({"x", "z"})}});
  CHECK(good.intersection_verified);
  CHECK(good.provenance == DecompositionProvenance::user_supplied);
  CHECK(standardized_radical(I, good) == R->ideal({"x", "y"}));

  auto S = PresentedRing::make(Field::rationals(), {"x", "y"});
  PrimaryDecomposition mixed = verify_decomposition(
      S->ideal({"x^2", "x*y"}), {{S->ideal({"x"}), S->ideal({"x"})},
                                 {S->ideal({"x^2", "y"}), S->ideal({"x", "y"})}});
  CHECK(mixed.components.size() == 2);

  // deliberate mismatch: (x^2) does not intersect back to (x)
  CHECK_THROWS_AS(verify_decomposition(S->ideal({"x"}), {{S->ideal({"x^2"}), S->ideal({"x"})}}), Error);
  // wrong radical: rad(x^2) = (x), not (x, y)
  CHECK_THROWS_AS(verify_decomposition(S->ideal({"x^2"}), {{S->ideal({"x^2"}), S->ideal({"x", "y"})}}), Error);
  // monomial non-prime p is rejected outright
  CHECK_THROWS_AS(verify_decomposition(S->ideal({"x^2"}), {{S->ideal({"x^2"}), S->ideal({"x^2"})}}), Error);
}

TEST_CASE("standardized radical refuses without a usable decomposition") {
  auto NonMono = PresentedRing::make(Field::rationals(), {"x", "y"}, {"x^2 - y^3"});
  CHECK_THROWS_AS(standardized_radical(NonMono->ideal({"x"})), Error);

  auto S = PresentedRing::make(Field::rationals(), {"x", "y"});
  CHECK_THROWS_AS(standardized_radical(S->ideal({"x + y^2"})), Error);  // non-monomial lift, no D
  CHECK_NOTHROW(standardized_radical(
      S->ideal({"x + y^2"}),
      verify_decomposition(S->ideal({"x + y^2"}), {{S->ideal({"x + y^2"}), S->ideal({"x + y^2"})}})));
}

TEST_CASE("rad_s distributes over intersections") {
  auto R = nonreduced_ring();
  SplitMix64 rng(401);
  for (int i = 0; i < 8; ++i) {
    MonomialIdeal A = random_monomial_ideal(3, rng, 3, 4);
    MonomialIdeal B = random_monomial_ideal(3, rng, 3, 4);
    Ideal I(R, A.to_polynomials(R->cover()));
    Ideal J(R, B.to_polynomials(R->cover()));
    Ideal lhs = standardized_radical(ideal_intersect(I, J));
    Ideal rhs = ideal_intersect(standardized_radical(I), standardized_radical(J));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rad(I) is contained in rad_s(I)") {
  auto R = nonreduced_ring();
  SplitMix64 rng(403);
  for (int i = 0; i < 12; ++i) {
    MonomialIdeal A = random_monomial_ideal(3, rng, 3, 4);
    Ideal I(R, A.to_polynomials(R->cover()));
    Ideal rads = standardized_radical(I);
    for (const auto& g : I.canonical_generators()) CHECK(radical_member(R->element(g), I));
    Ideal rad = radical_closure(R).apply(I);
    IdealRel rel = ideal_compare(rad, rads);
    CHECK((rel == IdealRel::equal || rel == IdealRel::subset));
  }
}

TEST_CASE("rad_s output is radical (an intersection of primes)") {
  auto R = nonreduced_ring();
  SplitMix64 rng(405);
  ClosureOp rad = radical_closure(R);
  for (int i = 0; i < 10; ++i) {
    MonomialIdeal A = random_monomial_ideal(3, rng, 3, 4);
    Ideal I(R, A.to_polynomials(R->cover()));
    Ideal rads = standardized_radical(I);
    if (rads.is_unit()) continue;
    CHECK(rad.apply(rads) == rads);
  }
}

TEST_CASE("witnessed standardization agrees from below on samples") {
  auto R = nonreduced_ring();
  SplitMix64 rng(407);
  ClosureOp rad = radical_closure(R);
  ClosureOp witnessed = standardize_witnessed(rad, WitnessSet({R->element("z")}));
  for (int i = 0; i < 10; ++i) {
    MonomialIdeal A = random_monomial_ideal(3, rng, 3, 4);
    Ideal I(R, A.to_polynomials(R->cover()));
    Ideal below = witnessed.apply(I);
    Ideal exact = standardized_radical(I);
    IdealRel rel = ideal_compare(below, exact);
    CHECK((rel == IdealRel::equal || rel == IdealRel::subset));
  }
}
