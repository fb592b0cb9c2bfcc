#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opal/closure.hpp"
#include "opal/stdrad.hpp"
#include "oracles.hpp"

using namespace opal;

namespace {

RingPtr QQ2() { return PresentedRing::make(Field::rationals(), {"x", "y"}); }
RingPtr nonreduced_ring() { return PresentedRing::make(Field::rationals(), {"x", "y", "z"}, {"x^2", "x*y"}); }

}  // namespace

TEST_CASE("identity closure") {
  auto R = PresentedRing::make(Field::rationals(), {"x", "y", "z"});
  ClosureOp id = identity_closure(R);
  Ideal I = R->ideal({"x", "y*z"});
  CHECK(id.apply(I) == I);
  CHECK(id.member(R->element("x"), I) == Tri::yes);
  CHECK(id.member(R->element("y"), I) == Tri::no);
}

TEST_CASE("radical closure computes on monomial lifts only") {
  auto R = QQ2();
  ClosureOp rad = radical_closure(R);
  CHECK(rad.apply(R->ideal({"x^2", "x*y"})) == R->ideal({"x"}));
  CHECK(rad.apply(R->ideal({"x^2"})) == R->ideal({"x"}));

  Ideal general = R->ideal({"x + y^2"});
  CHECK(!rad.try_apply(general).has_value());
  CHECK_THROWS_AS(rad.apply(general), Error);
  CHECK(rad.member(R->element("x + y^2"), general) == Tri::yes);  // oracle still total
}

TEST_CASE("integral closure op") {
  auto R = QQ2();
  ClosureOp intc = integral_closure_op(R);
  CHECK(intc.apply(R->ideal({"x^2", "y^2"})) == R->ideal({"x^2", "x*y", "y^2"}));
  CHECK(intc.apply(R->ideal({"x^3", "y^3"})) == R->ideal({"x^3", "x^2*y", "x*y^2", "y^3"}));
  CHECK(intc.member(R->element("x*y"), R->ideal({"x^2", "y^2"})) == Tri::yes);
  CHECK(intc.member(R->element("x*y"), R->ideal({"x^3", "y^3"})) == Tri::no);

  // non-monomial input: sound bounded power search, never a false yes
  Ideal general = R->ideal({"x + y"});
  CHECK(intc.member(R->element("x + y"), general) == Tri::yes);
  CHECK(intc.member(R->element("x"), general) == Tri::unknown);

  CHECK_THROWS_AS(integral_closure_op(nonreduced_ring()), Error);  // needs a polynomial ring
}

TEST_CASE("finitize is the identity on representable inputs") {
  auto R = QQ2();
  ClosureOp rad = radical_closure(R);
  ClosureOp radf = finitize(rad);
  CHECK(radf.claims_finite_type);
  CHECK(radf.name == "finitize(radical)");
  Ideal I = R->ideal({"x^2", "y^2"});
  CHECK(radf.apply(I) == rad.apply(I));
  ClosureOp idf = finitize(identity_closure(R));
  CHECK(idf.apply(I) == I);
  ClosureOp intf = finitize(integral_closure_op(R));
  CHECK(intf.apply(R->ideal({"x^3", "y^3"})) == R->ideal({"x^3", "x^2*y", "x*y^2", "y^3"}));
}

TEST_CASE("frobenius closure over GF(2)") {
  auto F = PresentedRing::make(Field::gf(2), {"x", "y"});
  ClosureOp frob = frobenius_closure(F, 2);
  Ideal I = F->ideal({"x", "y"});
  // regular ring: membership collapses to plain membership at this scale
  for (const auto& m : testing::monomials_up_to(2, 3)) {
    RingElement el = F->element(Polynomial::from_monomial(F->cover(), m, Scalar::residue(1, 2)));
    Tri verdict = frob.member(el, I);
    if (ideal_member(el, I))
      CHECK(verdict == Tri::yes);
    else
      CHECK(verdict == Tri::unknown);
  }
  CHECK_THROWS_AS(frobenius_closure(QQ2(), 2), Error);  // capability mismatch over QQ
  CHECK_THROWS_AS(construct_builtin("frobenius", QQ2(), 2), Error);
}

TEST_CASE("witness sets verify regularity") {
  auto R = nonreduced_ring();
  CHECK_NOTHROW(WitnessSet({R->element("z")}));
  CHECK_THROWS_AS(WitnessSet({R->element("x")}), Error);  // x is a zero-divisor
  WitnessSet pool = WitnessSet::default_pool(R);
  REQUIRE(pool.elements().size() == 1);  // only z survives the filter
  CHECK(pool.elements()[0] == R->element("z"));
  CHECK(WitnessSet::default_pool(QQ2()).elements().size() == 3);  // x, y, xy
}

TEST_CASE("witnessed standardization examples") {
  auto R = QQ2();
  ClosureOp rad = radical_closure(R);

  // W = {1}: recovers the radical
  ClosureOp s1 = standardize_witnessed(rad, WitnessSet({R->one()}));
  CHECK(s1.apply(R->ideal({"x"})) == R->ideal({"x"}));

  // W = {x} on (x): ((x^2)^rad : x) = ((x) : x) = R
  ClosureOp sx = standardize_witnessed(rad, WitnessSet({R->element("x")}));
  CHECK(sx.apply(R->ideal({"x"})).is_unit());

  // W = {z} suffices on (x, yz) in QQ[x,y,z]/(x^2, xy)
  auto Q = nonreduced_ring();
  ClosureOp srad = standardize_witnessed(radical_closure(Q), WitnessSet({Q->element("z")}));
  CHECK(srad.apply(Q->ideal({"x", "y*z"})) == Q->ideal({"x", "y"}));

  CHECK_THROWS_AS(standardize_witnessed(rad, WitnessSet({R->zero()})), Error);
}

TEST_CASE("standardization grows the closure and is monotone in witnesses") {
  auto R = QQ2();
  ClosureOp rad = radical_closure(R);
  WitnessSet small({R->element("x")});
  WitnessSet large({R->element("x"), R->element("y")});
  ClosureOp cs = standardize_witnessed(rad, small);
  ClosureOp cl = standardize_witnessed(rad, large);

  const char* ideals[][2] = {{"x^2", "x*y"}, {"x^2", "y^2"}, {"x*y", nullptr}, {"x^3", nullptr}};
  for (const auto& gens : ideals) {
    std::vector<std::string> texts{gens[0]};
    if (gens[1]) texts.emplace_back(gens[1]);
    Ideal I = R->ideal(texts);
    Ideal base = rad.apply(I);
    Ideal with_small = cs.apply(I);
    Ideal with_large = cl.apply(I);
    IdealRel r1 = ideal_compare(base, with_small);
    CHECK((r1 == IdealRel::equal || r1 == IdealRel::subset));  // c <= c_s^W
    IdealRel r2 = ideal_compare(with_small, with_large);
    CHECK((r2 == IdealRel::equal || r2 == IdealRel::subset));  // monotone in W
  }
}

TEST_CASE("witnessed standardization stays below the exact standardized radical") {
  auto Q = nonreduced_ring();
  ClosureOp rad = radical_closure(Q);
  Ideal I = Q->ideal({"x", "y*z"});
  Ideal exact = standardized_radical(I);
  for (const WitnessSet& W : {WitnessSet({Q->one()}), WitnessSet({Q->element("z")})}) {
    Ideal witnessed = standardize_witnessed(rad, W).apply(I);
    IdealRel rel = ideal_compare(witnessed, exact);
    CHECK((rel == IdealRel::equal || rel == IdealRel::subset));
  }
  // z alone is already a rich enough witness here
  CHECK(standardize_witnessed(rad, WitnessSet({Q->element("z")})).apply(I) == exact);
}

TEST_CASE("radical is weakly prime on samples") {
  auto R = QQ2();
  SplitMix64 rng(301);
  WitnessSet pool = WitnessSet::default_pool(R);
  for (int i = 0; i < 25; ++i) {
    Ideal I = random_ideal(R, rng, 2, 3, 2);
    const RingElement& w = pool.elements()[rng.below(pool.elements().size())];
    for (const auto& m : testing::monomials_up_to(2, 3)) {
      RingElement f = R->element(Polynomial::from_monomial(R->cover(), m, Scalar::rational(1)));
      if (radical_member(f, I)) CHECK(radical_member(w * f, ideal_scale(w, I)));
    }
  }
}

TEST_CASE("axiom report: radical in a domain fails standardness with the known witness") {
  auto R = QQ2();
  AxiomCheckConfig cfg;
  cfg.samples = 40;
  AxiomReport report = check_axioms(radical_closure(R), cfg);

  CHECK(report.find("extension")->verdict == Verdict::passed);
  CHECK(report.find("order-preservation")->verdict == Verdict::passed);
  CHECK(report.find("idempotence")->verdict == Verdict::passed);
  CHECK(report.find("weakly-prime")->verdict == Verdict::passed);

  const AxiomResult* standard = report.find("standard");
  REQUIRE(standard != nullptr);
  CHECK(standard->verdict == Verdict::failed);
  CHECK(!standard->claimed);  // radical never claimed standardness
  CHECK(report.claimed_ok());
  REQUIRE(standard->witness.has_value());
  // the documented witness shape: w = x, I = (x)
  CHECK(standard->witness->w->to_string() == "x");
  CHECK(standard->witness->ideal->to_string() == "(x)");

  // the witness replays: f in ((wI)^rad : w) but f not in I^rad
  const AxiomWitness& wit = *standard->witness;
  Ideal wI = ideal_scale(*wit.w, *wit.ideal);
  CHECK(radical_member(*wit.w * *wit.f, wI));
  CHECK(!radical_member(*wit.f, *wit.ideal));
}

TEST_CASE("axiom report: integral closure passes all five on monomial samples") {
  auto R = QQ2();
  AxiomCheckConfig cfg;
  cfg.samples = 25;
  cfg.monomial_samples = true;
  AxiomReport report = check_axioms(integral_closure_op(R), cfg);
  for (const char* axiom : {"extension", "order-preservation", "idempotence", "weakly-prime", "standard"}) {
    INFO(doctest::String(axiom));
    CHECK(report.find(axiom)->verdict == Verdict::passed);
  }
  CHECK(report.claimed_ok());
}

TEST_CASE("axiom report: identity passes everything") {
  auto R = QQ2();
  AxiomCheckConfig cfg;
  cfg.samples = 20;
  AxiomReport report = check_axioms(identity_closure(R), cfg);
  for (const auto& r : report.results) CHECK(r.verdict == Verdict::passed);
  CHECK(report.claimed_ok());
}

TEST_CASE("axiom report: frobenius idempotence is downgraded to not refuted") {
  auto F = PresentedRing::make(Field::gf(2), {"x", "y"});
  AxiomCheckConfig cfg;
  cfg.samples = 10;
  cfg.monomial_samples = true;
  AxiomReport report = check_axioms(frobenius_closure(F, 2), cfg);
  CHECK(report.find("idempotence")->verdict == Verdict::not_refuted);
  CHECK(report.find("extension")->verdict == Verdict::passed);  // e = 0 certifies generators
  CHECK(report.claimed_ok());
}

TEST_CASE("a broken operation fails with a replayable, minimal witness") {
  auto R = PresentedRing::make(Field::rationals(), {"x", "y", "z"});
  // deliberately not weakly prime: adjoin x whenever x*y lies in the ideal
  ClosureOp broken;
  broken.name = "broken";
  broken.ring = R;
  auto enlarged = [R](const Ideal& I) {
    return ideal_member(R->element("x*y"), I) ? ideal_sum(I, R->ideal({"x"})) : I;
  };
  broken.compute_fn = [enlarged](const Ideal& I) { return std::optional<Ideal>(enlarged(I)); };
  broken.member_fn = [enlarged](const RingElement& f, const Ideal& I) {
    return ideal_member(f, enlarged(I)) ? Tri::yes : Tri::no;
  };
  broken.compute_total = true;
  broken.claims_weakly_prime = true;

  AxiomCheckConfig cfg;
  cfg.samples = 60;
  cfg.seed = 9;
  cfg.witnesses = WitnessSet({R->element("z")});
  AxiomReport report = check_axioms(broken, cfg);

  const AxiomResult* wp = report.find("weakly-prime");
  REQUIRE(wp != nullptr);
  REQUIRE(wp->verdict == Verdict::failed);
  REQUIRE(wp->witness.has_value());
  const AxiomWitness& wit = *wp->witness;
  REQUIRE(wit.ideal.has_value());
  REQUIRE(wit.w.has_value());
  REQUIRE(wit.f.has_value());

  // the witness replays: f in I^c but w*f not in (w*I)^c
  CHECK(broken.member(*wit.f, *wit.ideal) == Tri::yes);
  CHECK(broken.member(*wit.w * *wit.f, ideal_scale(*wit.w, *wit.ideal)) == Tri::no);

  // greedy shrinking: dropping any single generator kills the violation
  auto gens = wit.ideal->canonical_generators();
  if (gens.size() > 1) {
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<Polynomial> rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      Ideal smaller(R, std::move(rest));
      bool still = broken.member(*wit.f, smaller) == Tri::yes &&
                   broken.member(*wit.w * *wit.f, ideal_scale(*wit.w, smaller)) == Tri::no;
      CHECK(!still);
    }
  }
}

TEST_CASE("finitize agrees with the base closure pointwise on samples") {
  auto R = QQ2();
  SplitMix64 rng(303);
  ClosureOp rad = radical_closure(R);
  ClosureOp radf = finitize(rad);
  for (int i = 0; i < 20; ++i) {
    MonomialIdeal mi = random_monomial_ideal(2, rng, 3, 4);
    Ideal I(R, mi.to_polynomials(R->cover()));
    CHECK(radf.apply(I) == rad.apply(I));
  }
}
