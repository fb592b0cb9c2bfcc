#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opal/primary.hpp"
#include "opal/closure.hpp"
#include "opal/rng.hpp"
#include "oracles.hpp"

using namespace opal;

namespace {

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal MI(int n, std::vector<Monomial> gens) { return MonomialIdeal(n, std::move(gens)); }

RingPtr QQ2() { return PresentedRing::make(Field::rationals(), {"x", "y"}); }
RingPtr QQ3() { return PresentedRing::make(Field::rationals(), {"x", "y", "z"}); }

}  // namespace

TEST_CASE("minimal generators form an antichain") {
  CHECK(MI(2, {M({1, 0}), M({1, 1})}) == MI(2, {M({1, 0})}));
  CHECK(MI(2, {M({2, 0}), M({1, 1}), M({0, 2}), M({2, 1})}) ==
        MI(2, {M({2, 0}), M({1, 1}), M({0, 2})}));
  CHECK(MI(2, {M({1, 0})}).generators().size() == 1);
}

TEST_CASE("monomial radical takes squarefree parts") {
  CHECK(monomial_radical(MI(2, {M({3, 0}), M({1, 2})})) == MI(2, {M({1, 0})}));
  CHECK(monomial_radical(MI(2, {M({2, 0}), M({1, 1})})) == MI(2, {M({1, 0})}));
  MonomialIdeal sqfree = MI(3, {M({1, 0, 0}), M({0, 1, 1})});
  CHECK(monomial_radical(sqfree) == sqfree);
}

TEST_CASE("primary and prime recognition") {
  CHECK(monomial_is_prime(MI(2, {M({1, 0}), M({0, 1})})));
  CHECK(!monomial_is_prime(MI(2, {M({2, 0})})));
  CHECK(monomial_is_primary(MI(2, {M({2, 0}), M({0, 1})})));
  CHECK(!monomial_is_primary(MI(2, {M({2, 0}), M({1, 1})})));  // y occurs, no pure power
}

TEST_CASE("primary decomposition by splitting") {
  // (x^2, xy) = (x) ∩ (x^2, y)
  auto comps = monomial_primary_components(MI(2, {M({2, 0}), M({1, 1})}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].first == MI(2, {M({1, 0})}));
  CHECK(comps[0].second == MI(2, {M({1, 0})}));
  CHECK(comps[1].first == MI(2, {M({2, 0}), M({0, 1})}));
  CHECK(comps[1].second == MI(2, {M({1, 0}), M({0, 1})}));

  // (x, yz) = (x, y) ∩ (x, z)
  auto split = monomial_primary_components(MI(3, {M({1, 0, 0}), M({0, 1, 1})}));
  REQUIRE(split.size() == 2);
  CHECK(split[0].first == MI(3, {M({1, 0, 0}), M({0, 1, 0})}));
  CHECK(split[1].first == MI(3, {M({1, 0, 0}), M({0, 0, 1})}));

  // a prime input decomposes as itself
  auto prime = monomial_primary_components(MI(2, {M({1, 0}), M({0, 1})}));
  REQUIRE(prime.size() == 1);
  CHECK(prime[0].first == MI(2, {M({1, 0}), M({0, 1})}));
}

TEST_CASE("ring-level decomposition carries verification statuses") {
  auto R = QQ2();
  Ideal I = R->ideal({"x^2", "x*y"});
  PrimaryDecomposition D = monomial_primary_decomposition(I);
  CHECK(D.intersection_verified);
  CHECK(D.provenance == DecompositionProvenance::computed_monomial);
  REQUIRE(D.components.size() == 2);
  for (const auto& c : D.components) {
    CHECK(c.q_contained_in_p == VerifyStatus::verified);
    CHECK(c.p_is_radical_of_q == VerifyStatus::verified);
    CHECK(c.p_is_prime == VerifyStatus::verified);
  }

  auto primes = associated_primes(D);
  REQUIRE(primes.size() == 2);
  CHECK(((primes[0] == R->ideal({"x"})) || (primes[1] == R->ideal({"x"}))));
  CHECK(((primes[0] == R->ideal({"x", "y"})) || (primes[1] == R->ideal({"x", "y"}))));

  PrimaryDecomposition unverified = D;
  unverified.intersection_verified = false;
  CHECK_THROWS_AS(associated_primes(unverified), Error);
}

TEST_CASE("associated primes of (x, yz)") {
  auto S = QQ3();
  PrimaryDecomposition D = monomial_primary_decomposition(S->ideal({"x", "y*z"}));
  auto primes = associated_primes(D);
  REQUIRE(primes.size() == 2);
  CHECK(ideal_compare(primes[0], primes[1]) == IdealRel::incomparable);

  PrimaryDecomposition P = monomial_primary_decomposition(S->ideal({"x", "y"}));
  CHECK(associated_primes(P).size() == 1);
  CHECK(associated_primes(P)[0] == S->ideal({"x", "y"}));
}

TEST_CASE("integral closure via the Newton polyhedron") {
  CHECK(monomial_integral_closure(MI(2, {M({2, 0}), M({0, 2})})) ==
        MI(2, {M({2, 0}), M({1, 1}), M({0, 2})}));
  CHECK(monomial_integral_closure(MI(2, {M({3, 0}), M({0, 3})})) ==
        MI(2, {M({3, 0}), M({2, 1}), M({1, 2}), M({0, 3})}));
  CHECK(!newton_member(M({1, 1}), MI(2, {M({3, 0}), M({0, 3})})));
  CHECK(monomial_integral_closure(MI(2, {M({1, 0})})) == MI(2, {M({1, 0})}));
}

TEST_CASE("decomposition components multiply back on random inputs") {
  SplitMix64 rng(101);
  auto S = QQ3();
  for (int i = 0; i < 50; ++i) {
    MonomialIdeal I = random_monomial_ideal(3, rng, 4, 5);
    auto comps = monomial_primary_components(I);
    REQUIRE(!comps.empty());
    MonomialIdeal meet(3, {Monomial(3)});  // unit
    for (const auto& [q, p] : comps) {
      CHECK(monomial_is_primary(q));
      CHECK(monomial_radical(q) == p);
      meet = monomial_intersect(meet, q);
    }
    CHECK(meet == I);
    // exact Groebner cross-check at ring level
    Ideal lifted(S, I.to_polynomials(S->cover()));
    Ideal meet_ideal = S->unit_ideal();
    for (const auto& [q, p] : comps) meet_ideal = ideal_intersect(meet_ideal, Ideal(S, q.to_polynomials(S->cover())));
    CHECK(meet_ideal == lifted);
  }
}

TEST_CASE("monomial radical agrees with Rabinowitsch membership") {
  SplitMix64 rng(103);
  auto S = QQ2();
  for (int i = 0; i < 12; ++i) {
    MonomialIdeal I = random_monomial_ideal(2, rng, 3, 4);
    MonomialIdeal rad = monomial_radical(I);
    Ideal lifted(S, I.to_polynomials(S->cover()));
    for (const auto& m : testing::monomials_up_to(2, 6)) {
      RingElement el = S->element(Polynomial::from_monomial(S->cover(), m, Scalar::rational(1)));
      CHECK(rad.contains(m) == radical_member(el, lifted));
    }
  }
}

TEST_CASE("integral closure properties on random inputs") {
  SplitMix64 rng(107);
  for (int i = 0; i < 50; ++i) {
    MonomialIdeal I = random_monomial_ideal(3, rng, 4, 5);
    MonomialIdeal closed = monomial_integral_closure(I);

    // contains the ideal
    for (const auto& g : I.generators()) CHECK(closed.contains(g));
    // idempotent
    CHECK(monomial_integral_closure(closed) == closed);
    // same radical
    CHECK(monomial_radical(closed) == monomial_radical(I));
  }
}

TEST_CASE("integral closure matches the bounded power oracle") {
  SplitMix64 rng(109);
  for (int i = 0; i < 25; ++i) {
    MonomialIdeal I = random_monomial_ideal(2, rng, 3, 5);
    MonomialIdeal closed = monomial_integral_closure(I);
    for (const auto& m : testing::monomials_up_to(2, 6)) {
      bool oracle = testing::power_oracle_integral(m, I, 6);
      if (oracle) CHECK(closed.contains(m));
      if (closed.contains(m) && m.degree() <= 5) CHECK(testing::power_oracle_integral(m, I, 6));
    }
  }
}

TEST_CASE("decomposition refuses the unit ideal") {
  CHECK_THROWS_AS(monomial_primary_components(MI(2, {M({0, 0})})), Error);
  auto R = QQ2();
  CHECK_THROWS_AS(monomial_primary_decomposition(R->unit_ideal()), Error);
}

TEST_CASE("decomposition needs a monomial lift") {
  auto R = QQ2();
  CHECK_THROWS_AS(monomial_primary_decomposition(R->ideal({"x + y^2"})), Error);
  auto Q = PresentedRing::make(Field::rationals(), {"x", "y"}, {"x^2 - y"});
  CHECK_THROWS_AS(monomial_primary_decomposition(Q->ideal({"x"})), Error);
}
