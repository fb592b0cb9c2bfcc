#include "opal/semistar.hpp"

#include <sstream>

namespace opal {

Fraction Fraction::over_one(const RingElement& r) { return Fraction{r, r.ring()->one()}; }

std::string Fraction::to_string() const {
  if (den.is_unit_constant() && den.rep().is_constant() && den.rep().leading().coeff.is_one())
    return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

FractionalIdeal::FractionalIdeal(Ideal numerator, RingElement denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!same_presented_ring(num_.ring(), den_.ring()))
    fail(Errc::incompatible_ring, "numerator and denominator from different rings");
  if (!is_regular(den_))
    fail(Errc::non_regular_witness, "denominator " + den_.to_string() + " is not regular");
  // reduce a detectable common regular factor: if N = d*M then (N,d) = (M,1)
  if (!den_.is_unit_constant()) {
    Ideal quotient = ideal_colon(num_, den_);
    if (ideal_compare(ideal_scale(den_, quotient), num_) == IdealRel::equal) {
      num_ = quotient;
      den_ = num_.ring()->one();
    }
  }
}

std::string FractionalIdeal::to_string() const {
  if (den_.is_unit_constant() && den_.rep().leading().coeff.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

bool frac_equal(const FractionalIdeal& A, const FractionalIdeal& B) {
  if (!same_presented_ring(A.ring(), B.ring())) fail(Errc::incompatible_ring, "fractional ideals from different rings");
  Ideal lhs = ideal_scale(B.denominator(), A.numerator());
  Ideal rhs = ideal_scale(A.denominator(), B.numerator());
  return ideal_compare(lhs, rhs) == IdealRel::equal;
}

FractionalIdeal frac_scale(const FractionalIdeal& A, const Fraction& u) {
  if (!is_regular(u.num))
    fail(Errc::non_regular_witness, "scale numerator " + u.num.to_string() + " is not regular");
  if (!is_regular(u.den))
    fail(Errc::non_regular_witness, "scale denominator " + u.den.to_string() + " is not regular");
  return FractionalIdeal(ideal_scale(u.num, A.numerator()), u.den * A.denominator());
}

SemistarOp::SemistarOp(std::string name, std::function<Tri(const Fraction&, const FractionalIdeal&)> member,
                       std::optional<ClosureOp> origin)
    : name_(std::move(name)), member_(std::move(member)), origin_(std::move(origin)) {}

Tri SemistarOp::member(const Fraction& f, const FractionalIdeal& A) const { return member_(f, A); }

Tri pi_member(const ClosureOp& c, const Fraction& f, const FractionalIdeal& A) {
  if (!same_presented_ring(A.ring(), c.ring)) fail(Errc::incompatible_ring, "fractional ideal outside the ring");
  if (!is_regular(f.den)) fail(Errc::non_regular_witness, "fraction denominator " + f.den.to_string() + " is not regular");
  // witness x := A's denominator d, so x*A = N ⊆ R; then f ∈ A_pi(c) iff
  // x*r ∈ (z * xA)^c
  Ideal zN = ideal_scale(f.den, A.numerator());
  return c.member(A.denominator() * f.num, zN);
}

SemistarOp sigma_f(const ClosureOp& c) {
  ClosureOp copy = c;
  return SemistarOp("sigma_f(" + c.name + ")",
                    [copy](const Fraction& f, const FractionalIdeal& A) { return pi_member(copy, f, A); },
                    c);
}

Tri kappa_member(const SemistarOp& star, const RingElement& r, const Ideal& I) {
  return star.member(Fraction::over_one(r), FractionalIdeal(I, r.ring()->one()));
}

std::optional<Ideal> kappa_ideal(const SemistarOp& star, const Ideal& I) {
  // kappa(sigma_f(c)) = c_f = c on finitely generated ideals
  if (!star.origin()) return std::nullopt;
  return star.origin()->try_apply(I);
}

ClosureOp kappa(const SemistarOp& star) {
  ClosureOp op;
  op.name = "kappa(" + star.name() + ")";
  if (star.origin()) {
    op.ring = star.origin()->ring;
    op.oracle_total = star.origin()->oracle_total;
    op.semi_decision_bound = star.origin()->semi_decision_bound;
    op.compute_total = star.origin()->compute_total;
  } else {
    fail(Errc::unsupported_computation, "kappa needs a semistar operation with a known ring");
  }
  SemistarOp captured = star;
  op.member_fn = [captured](const RingElement& r, const Ideal& I) { return kappa_member(captured, r, I); };
  op.compute_fn = [captured](const Ideal& I) { return kappa_ideal(captured, I); };
  op.claims_standard = true;  // kappa of a semistar operation is standard
  op.claims_closure = true;
  op.claims_finite_type = true;
  op.claims_weakly_prime = true;
  return op;
}

Tri b_member(const Fraction& f, const FractionalIdeal& A) {
  const RingPtr& R = A.ring();
  if (!R->is_domain() || !R->relations_trivial())
    fail(Errc::unsupported_computation,
         "the b-operation needs a domain presented with zero relations; " + R->to_string() + " is not");
  return pi_member(integral_closure_op(R), f, A);
}

bool CorrespondenceReport::ok() const {
  for (const auto& p : parts)
    if (!p.passed) return false;
  return true;
}

std::string CorrespondenceReport::to_string() const {
  std::ostringstream os;
  os << "correspondence report for " << op_name << " (seed " << seed << ")\n";
  for (const auto& p : parts) {
    os << "  " << p.name << ": " << (p.passed ? "passed" : "FAILED") << " (" << p.checks << " checks)";
    if (!p.failure.empty()) os << " " << p.failure;
    os << "\n";
  }
  return os.str();
}

namespace {

// all monomials of the ring with total degree <= bound, ascending
std::vector<Monomial> monomials_up_to(int nvars, int bound) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  for (;;) {
    Monomial m{std::vector<int>(e)};
    if (m.degree() <= bound) out.push_back(std::move(m));
    int v = nvars - 1;
    while (v >= 0 && e[static_cast<size_t>(v)] == bound) {
      e[static_cast<size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
    ++e[static_cast<size_t>(v)];
  }
  return out;
}

}  // namespace

CorrespondenceReport check_correspondence(const ClosureOp& c, const CorrespondenceConfig& cfg) {
  const RingPtr& R = c.ring;
  CorrespondenceReport report;
  report.op_name = c.name;
  report.seed = cfg.seed;

  SplitMix64 rng(cfg.seed);
  std::vector<Ideal> samples;
  for (int i = 0; i < cfg.ideal_samples; ++i) {
    MonomialIdeal mi = random_monomial_ideal(R->cover()->nvars(), rng, cfg.max_generators, cfg.max_degree);
    samples.push_back(Ideal(R, mi.to_polynomials(R->cover())));
  }

  SemistarOp star = sigma_f(c);
  std::vector<Monomial> probes = monomials_up_to(R->cover()->nvars(), cfg.probe_degree);

  // (a) kappa(sigma_f(c)) = c on sampled ideals: membership sweep plus exact
  // ideal equality through the computer when present
  CorrespondencePart part_a{"kappa(sigma_f(c)) = c", true, 0, ""};
  for (const auto& I : samples) {
    std::optional<Ideal> closed = c.try_apply(I);
    if (closed) {
      std::optional<Ideal> viaKappa = kappa_ideal(star, I);
      ++part_a.checks;
      if (!viaKappa || !(ideal_compare(*viaKappa, *closed) == IdealRel::equal)) {
        part_a.passed = false;
        part_a.failure = "ideal mismatch at I = " + I.to_string();
        break;
      }
    }
    for (const auto& m : probes) {
      RingElement r = R->element(Polynomial::from_monomial(R->cover(), m, R->cover()->field().one()));
      Tri direct = c.member(r, I);
      Tri roundtrip = kappa_member(star, r, I);
      ++part_a.checks;
      if (direct != roundtrip) {
        part_a.passed = false;
        part_a.failure = "membership mismatch: f = " + r.to_string() + ", I = " + I.to_string() + " (" +
                         tri_name(direct) + " vs " + tri_name(roundtrip) + ")";
        break;
      }
    }
    if (!part_a.passed) break;
  }
  report.parts.push_back(part_a);

  // (b) sigma_f(kappa(sigma_f(c))) = sigma_f(c) on fractional ideals, swept
  // over monomial fractions r/z
  CorrespondencePart part_b{"sigma_f(kappa(sigma_f(c))) = sigma_f(c)", true, 0, ""};
  SemistarOp star2 = sigma_f(kappa(star));
  std::vector<RingElement> zpool;
  zpool.push_back(R->one());
  for (int i = 0; i < R->cover()->nvars() && i < 2; ++i) zpool.push_back(R->var(i));
  if (R->cover()->nvars() >= 2) zpool.push_back(R->var(0) * R->var(1));

  int frac_samples = std::min(cfg.ideal_samples, 8);
  for (int s = 0; s < frac_samples && part_b.passed; ++s) {
    MonomialIdeal mi = random_monomial_ideal(R->cover()->nvars(), rng, cfg.max_generators, cfg.max_degree);
    Ideal N(R, mi.to_polynomials(R->cover()));
    const RingElement& d = zpool[rng.below(zpool.size())];
    if (!is_regular(d)) continue;
    FractionalIdeal A(N, d);
    for (const auto& z : zpool) {
      for (const auto& m : probes) {
        if (m.degree() > cfg.probe_degree) continue;
        RingElement r = R->element(Polynomial::from_monomial(R->cover(), m, R->cover()->field().one()));
        Fraction f{r, z};
        Tri lhs = star.member(f, A);
        Tri rhs = star2.member(f, A);
        ++part_b.checks;
        if (lhs != rhs) {
          part_b.passed = false;
          part_b.failure = "mismatch: f = " + f.to_string() + ", A = " + A.to_string() + " (" + tri_name(lhs) +
                           " vs " + tri_name(rhs) + ")";
          break;
        }
      }
      if (!part_b.passed) break;
    }
  }
  report.parts.push_back(part_b);

  // (c) order preservation of sigma_f across identity <= c
  CorrespondencePart part_c{"sigma_f preserves identity <= " + c.name, true, 0, ""};
  SemistarOp star_id = sigma_f(identity_closure(R));
  for (int s = 0; s < frac_samples && part_c.passed; ++s) {
    MonomialIdeal mi = random_monomial_ideal(R->cover()->nvars(), rng, cfg.max_generators, cfg.max_degree);
    Ideal N(R, mi.to_polynomials(R->cover()));
    FractionalIdeal A(N, R->one());
    for (const auto& m : probes) {
      RingElement r = R->element(Polynomial::from_monomial(R->cover(), m, R->cover()->field().one()));
      Fraction f = Fraction::over_one(r);
      ++part_c.checks;
      if (star_id.member(f, A) == Tri::yes && star.member(f, A) == Tri::no) {
        part_c.passed = false;
        part_c.failure = "order violated at f = " + r.to_string() + ", A = " + A.to_string();
        break;
      }
    }
  }
  report.parts.push_back(part_c);
  return report;
}

}  // namespace opal
