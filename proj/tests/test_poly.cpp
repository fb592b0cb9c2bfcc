#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opal/polynomial.hpp"
#include "opal/rng.hpp"

using namespace opal;

namespace {

PolyRingPtr QQxy() { return PolyRing::make(Field::rationals(), {"x", "y"}); }

Polynomial P(const PolyRingPtr& R, std::string_view text) { return Polynomial::parse(R, text); }

}  // namespace

TEST_CASE("scalar arithmetic stays reduced") {
  Scalar a = Scalar::rational(2, 4);
  CHECK(a.to_string() == "1/2");
  Scalar b = Scalar::rational(-3, -6);
  CHECK(b.to_string() == "1/2");
  CHECK((a + b).to_string() == "1");
  CHECK((a - b).is_zero());
  CHECK((a * Scalar::rational(4)).to_string() == "2");
  CHECK(Scalar::rational(7, 2).inverse().to_string() == "2/7");

  Scalar r = Scalar::residue(-1, 101);
  CHECK(r.to_string() == "100");
  CHECK((r + Scalar::residue(1, 101)).is_zero());
  CHECK(Scalar::residue(3, 101).inverse().res() == 34);  // 3*34 = 102 = 1

  CHECK_THROWS_AS(Scalar::rational(1) + Scalar::residue(1, 7), Error);
}

TEST_CASE("prime field construction rejects composites") {
  CHECK_THROWS_AS(Field::gf(91), Error);  // 7*13
  CHECK_NOTHROW(Field::gf(2));
  CHECK_NOTHROW(Field::gf(2147483647));  // 2^31 - 1
}

TEST_CASE("polynomial arithmetic examples") {
  auto R = QQxy();
  CHECK(P(R, "x+y") * P(R, "x-y") == P(R, "x^2 - y^2"));
  CHECK(P(R, "x^2+y") + P(R, "-x^2") == P(R, "y"));

  auto F = PolyRing::make(Field::gf(101), {"x"});
  CHECK((P(F, "50*x") + P(F, "51*x")).is_zero());
}

TEST_CASE("mixed rings are rejected") {
  auto R = QQxy();
  auto F = PolyRing::make(Field::gf(101), {"x", "y"});
  CHECK_THROWS_AS(P(R, "x") + P(F, "x"), Error);
  auto R3 = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  CHECK_THROWS_AS(P(R, "x") * P(R3, "x"), Error);
}

TEST_CASE("leading terms under different orders") {
  auto R = QQxy();
  Polynomial f = P(R, "x^2*y + x*y^3 + y");

  Term grevlex_lead = leading_term(f, R->grevlex());
  CHECK(grevlex_lead.mono == Monomial(std::vector<int>{1, 3}));

  Term lex_lead = leading_term(f, R->lex());
  CHECK(lex_lead.mono == Monomial(std::vector<int>{2, 1}));

  Polynomial x = P(R, "x");
  CHECK(leading_term(x, R->lex()).mono == Monomial(std::vector<int>{1, 0}));
  CHECK(leading_term(x, R->grevlex()).coeff.is_one());

  CHECK_THROWS_AS(leading_term(Polynomial::zero(R), R->lex()), Error);
}

TEST_CASE("printing and parsing round-trip to canonical form") {
  auto R3 = PolyRing::make(Field::rationals(), {"x", "y", "z"});
  const char* texts[] = {"x^2*y - 3/2*z", "x - y", "-x + 1", "0 + x*x", "2/4*x^2"};
  for (const char* t : texts) {
    Polynomial f = P(R3, t);
    Polynomial again = P(R3, f.to_string());
    CHECK(f == again);
    CHECK(f.to_string() == again.to_string());
  }
  CHECK(P(R3, "x^2*y - 3/2*z").to_string() == "x^2*y - 3/2*z");
  CHECK(P(R3, "x*x").to_string() == "x^2");
  CHECK(Polynomial::zero(R3).to_string() == "0");
}

TEST_CASE("parser reports bad input") {
  auto R = QQxy();
  CHECK_THROWS_AS(P(R, "w + 1"), Error);      // unknown variable
  CHECK_THROWS_AS(P(R, "x +"), Error);        // dangling operator
  CHECK_THROWS_AS(P(R, "x ^ y"), Error);      // non-integer exponent
  CHECK_THROWS_AS(P(R, "(x"), Error);         // unbalanced
  CHECK_THROWS_AS(P(R, "1/0"), Error);        // zero denominator
}

TEST_CASE("canonicalization is idempotent") {
  auto R = QQxy();
  Polynomial f = P(R, "x*y + x^2 - x*y + 3 - 3");  // collapses to x^2
  CHECK(f == P(R, "x^2"));
  CHECK(f.with_order(R->lex()).with_order(R->grevlex()) == f);
}

TEST_CASE("ring axioms hold on random triples") {
  auto F = PolyRing::make(Field::gf(101), {"x", "y"});
  auto R = QQxy();
  SplitMix64 rng(2024);

  auto random_poly = [&](const PolyRingPtr& ring) {
    std::vector<Term> terms;
    int count = rng.range(1, 4);
    for (int i = 0; i < count; ++i) {
      std::vector<int> e{rng.range(0, 3), rng.range(0, 3)};
      long c = ring->field().is_rationals() ? rng.range(-4, 4) : static_cast<long>(rng.below(101));
      terms.push_back(Term{Monomial(std::move(e)), ring->field().from_long(c)});
    }
    return Polynomial::from_terms(ring, ring->grevlex(), std::move(terms));
  };

  int qq_rounds = 200;
  for (int i = 0; i < 1000; ++i) {
    const PolyRingPtr& ring = (i < qq_rounds) ? R : F;
    Polynomial f = random_poly(ring), g = random_poly(ring), h = random_poly(ring);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("monomial orders are multiplicative well-orders") {
  SplitMix64 rng(7);
  const int n = 3;
  MonomialOrder orders[] = {MonomialOrder::lex(n), MonomialOrder::grevlex(n), MonomialOrder::block(1, n)};
  for (const auto& ord : orders) {
    Monomial one(n);
    for (int i = 0; i < 500; ++i) {
      auto rand_mono = [&] {
        std::vector<int> e{rng.range(0, 4), rng.range(0, 4), rng.range(0, 4)};
        return Monomial(std::move(e));
      };
      Monomial a = rand_mono(), b = rand_mono(), m = rand_mono();
      int c = ord.cmp(a, b);
      CHECK(c == -ord.cmp(b, a));
      if (c < 0) CHECK(ord.cmp(a * m, b * m) < 0);  // multiplicative
      if (!a.is_one()) CHECK(ord.cmp(a, one) > 0);  // 1 is minimal
    }
  }
}

TEST_CASE("lex order respects a variable permutation") {
  auto R = QQxy();
  MonomialOrder yx = R->lex().with_permutation({1, 0});  // y > x
  Polynomial f = P(R, "x^2 + y");
  CHECK(leading_term(f, yx).mono == Monomial(std::vector<int>{0, 1}));
}
