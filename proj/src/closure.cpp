#include "opal/closure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace opal {

WitnessSet::WitnessSet(std::vector<RingElement> elements) {
  if (elements.empty()) fail(Errc::invalid_argument, "empty witness set");
  ring_ = elements[0].ring();
  for (const auto& e : elements) {
    if (!same_presented_ring(e.ring(), ring_)) fail(Errc::incompatible_ring, "witness outside the ring");
    if (!is_regular(e))
      fail(Errc::non_regular_witness, "witness " + e.to_string() + " is a zero-divisor in " + ring_->to_string());
  }
  elements_ = std::move(elements);
}

WitnessSet WitnessSet::default_pool(const RingPtr& ring) {
  WitnessSet out;
  out.ring_ = ring;
  std::vector<RingElement> candidates;
  int n = ring->cover()->nvars();
  for (int i = 0; i < n; ++i) candidates.push_back(ring->var(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) candidates.push_back(ring->var(i) * ring->var(j));
  for (const auto& c : candidates)
    if (is_regular(c)) out.elements_.push_back(c);
  return out;
}

WitnessSet WitnessSet::with(const RingElement& extra) const {
  std::vector<RingElement> elems(elements_.begin(), elements_.end());
  elems.push_back(extra);
  return WitnessSet(std::move(elems));
}

std::string WitnessSet::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ", ";
    os << elements_[i].to_string();
  }
  os << "]";
  return os.str();
}

Tri ClosureOp::member(const RingElement& f, const Ideal& I) const {
  if (!same_presented_ring(f.ring(), ring) || !same_presented_ring(I.ring(), ring))
    fail(Errc::incompatible_ring, "operands outside the closure operation's ring");
  return member_fn(f, I);
}

std::optional<Ideal> ClosureOp::try_apply(const Ideal& I) const {
  if (!same_presented_ring(I.ring(), ring)) fail(Errc::incompatible_ring, "ideal outside the operation's ring");
  if (!compute_fn) return std::nullopt;
  return compute_fn(I);
}

Ideal ClosureOp::apply(const Ideal& I) const {
  std::optional<Ideal> r = try_apply(I);
  if (!r)
    fail(Errc::unsupported_computation,
         name + " has no closure computer for " + I.to_string() + "; use its membership oracle instead");
  return *r;
}

ClosureOp identity_closure(RingPtr ring) {
  ClosureOp op;
  op.name = "identity";
  op.ring = ring;
  op.member_fn = [](const RingElement& f, const Ideal& I) { return ideal_member(f, I) ? Tri::yes : Tri::no; };
  op.compute_fn = [](const Ideal& I) { return std::optional<Ideal>(I); };
  op.compute_total = true;
  op.claims_standard = true;
  return op;
}

ClosureOp radical_closure(RingPtr ring) {
  ClosureOp op;
  op.name = "radical";
  op.ring = ring;
  op.member_fn = [](const RingElement& f, const Ideal& I) { return radical_member(f, I) ? Tri::yes : Tri::no; };
  op.compute_fn = [](const Ideal& I) -> std::optional<Ideal> {
    if (!I.lift_is_monomial()) return std::nullopt;
    MonomialIdeal rad = monomial_radical(I.monomial_lift());
    return Ideal(I.ring(), rad.to_polynomials(I.ring()->cover()));
  };
  op.compute_total = false;
  op.claims_standard = false;  // almost never standard: ((w*I)^rad : w) grows
  return op;
}

namespace {

// f^k in I^k for some k <= bound: a sound certificate of integrality.
bool bounded_power_integral(const RingElement& f, const Ideal& I, int bound) {
  Ideal power = I;
  RingElement fk = f;
  for (int k = 1; k <= bound; ++k) {
    if (k > 1) {
      power = ideal_product(power, I);
      fk = fk * f;
    }
    if (ideal_member(fk, power)) return true;
  }
  return false;
}

}  // namespace

namespace {

// Newton-polyhedron closures are pure but not cheap; memoize them per op so
// membership sweeps over one ideal pay for the polyhedron once.
struct ClosureMemo {
  std::mutex lock;
  std::map<std::string, Ideal> computed;
};

}  // namespace

ClosureOp integral_closure_op(RingPtr ring, int power_bound) {
  if (!ring->relations_trivial())
    fail(Errc::capability_mismatch, "integral closure is implemented over polynomial rings only");
  ClosureOp op;
  op.name = "integral";
  op.ring = ring;
  auto memo = std::make_shared<ClosureMemo>();
  auto closed_form = [memo](const Ideal& I) -> std::optional<Ideal> {
    if (!I.lift_is_monomial()) return std::nullopt;
    std::string key = I.basis().to_string();
    {
      std::lock_guard<std::mutex> guard(memo->lock);
      auto it = memo->computed.find(key);
      if (it != memo->computed.end()) return it->second;
    }
    MonomialIdeal closed = monomial_integral_closure(I.monomial_lift());
    Ideal result(I.ring(), closed.to_polynomials(I.ring()->cover()));
    {
      std::lock_guard<std::mutex> guard(memo->lock);
      memo->computed.emplace(std::move(key), result);
    }
    return result;
  };
  op.compute_fn = closed_form;
  op.member_fn = [closed_form, power_bound](const RingElement& f, const Ideal& I) -> Tri {
    if (std::optional<Ideal> closure = closed_form(I)) return ideal_member(f, *closure) ? Tri::yes : Tri::no;
    return bounded_power_integral(f, I, power_bound) ? Tri::yes : Tri::unknown;
  };
  op.oracle_total = false;  // bounded search on non-monomial ideals
  op.semi_decision_bound = power_bound;
  op.claims_standard = true;
  return op;
}

namespace {

// q-th power in characteristic p with q a power of p: exponents scale, and
// prime-field coefficients are Frobenius-fixed.
Polynomial frobenius_power(const Polynomial& f, long q) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    if (t.mono.degree() > 0 && static_cast<long>(t.mono.degree()) * q > (1L << 30))
      fail(Errc::capability_mismatch, "Frobenius power exponent overflow");
    terms.push_back(Term{t.mono.pow(static_cast<int>(q)), t.coeff});
  }
  return Polynomial::from_terms(f.ring(), f.order(), std::move(terms));
}

}  // namespace

ClosureOp frobenius_closure(RingPtr ring, int e_max) {
  long p = ring->cover()->field().modulus();
  if (p == 0) fail(Errc::capability_mismatch, "Frobenius closure needs a prime-field ring, not QQ");
  if (e_max < 0) fail(Errc::invalid_argument, "e_max must be non-negative");
  long q = 1;
  for (int e = 0; e < e_max; ++e) {
    if (q > (1L << 26) / p)
      fail(Errc::capability_mismatch, "p^e_max too large for exponent arithmetic");
    q *= p;
  }
  ClosureOp op;
  op.name = "frobenius(e_max=" + std::to_string(e_max) + ")";
  op.ring = ring;
  op.member_fn = [p, e_max](const RingElement& f, const Ideal& I) -> Tri {
    long qe = 1;
    for (int e = 0; e <= e_max; ++e) {
      // f^{p^e} in I^{[p^e]}, the ideal of generator p^e-th powers
      Polynomial fq = frobenius_power(f.rep(), qe);
      std::vector<Polynomial> gens;
      for (const auto& g : I.canonical_generators()) gens.push_back(frobenius_power(g, qe));
      Ideal bracket(I.ring(), std::move(gens));
      if (ideal_member(I.ring()->element(fq), bracket)) return Tri::yes;
      qe *= p;
    }
    return Tri::unknown;
  };
  op.oracle_total = false;
  op.semi_decision_bound = e_max;
  op.claims_standard = true;
  return op;
}

ClosureOp construct_builtin(const std::string& which, RingPtr ring, std::optional<long> parameter) {
  if (which == "identity") return identity_closure(std::move(ring));
  if (which == "radical") return radical_closure(std::move(ring));
  if (which == "integral") return integral_closure_op(std::move(ring));
  if (which == "frobenius") {
    if (!parameter) fail(Errc::invalid_argument, "frobenius needs e_max, e.g. frobenius(e_max=2)");
    return frobenius_closure(std::move(ring), static_cast<int>(*parameter));
  }
  fail(Errc::undefined_name, "unknown closure operation '" + which + "'");
}

ClosureOp finitize(const ClosureOp& c) {
  // On finitely generated inputs the defining union is attained at J = I,
  // so the finitization acts identically; only the finite-type tag changes.
  ClosureOp op = c;
  op.name = "finitize(" + c.name + ")";
  op.claims_finite_type = true;
  return op;
}

ClosureOp standardize_witnessed(const ClosureOp& c, const WitnessSet& witnesses) {
  if (!same_presented_ring(c.ring, witnesses.ring()))
    fail(Errc::incompatible_ring, "witness set belongs to a different ring");
  if (!c.claims_weakly_prime)
    fail(Errc::capability_mismatch,
         "standardization needs a weakly prime operation; " + c.name + " does not claim it");

  std::vector<RingElement> ws(witnesses.elements().begin(), witnesses.elements().end());

  ClosureOp op;
  op.name = "standardize(" + c.name + "; witnesses=" + witnesses.to_string() + ")";
  op.ring = c.ring;

  auto inner = std::make_shared<ClosureOp>(c);
  auto pool = std::make_shared<std::vector<RingElement>>(std::move(ws));

  op.compute_fn = [inner, pool](const Ideal& I) -> std::optional<Ideal> {
    std::optional<Ideal> base = inner->try_apply(I);  // the w = 1 term
    if (!base) return std::nullopt;
    Ideal acc = *base;
    for (const auto& w : *pool) {
      std::optional<Ideal> wc = inner->try_apply(ideal_scale(w, I));
      if (!wc) return std::nullopt;
      acc = ideal_sum(acc, ideal_colon(*wc, w));
    }
    return acc;
  };
  op.member_fn = [inner, pool, compute = op.compute_fn](const RingElement& f, const Ideal& I) -> Tri {
    if (std::optional<Ideal> closed = compute(I))
      return ideal_member(f, *closed) ? Tri::yes : Tri::no;
    // membership in one union term is a sound certificate for the sum
    bool saw_unknown = false;
    Tri direct = inner->member(f, I);
    if (direct == Tri::yes) return Tri::yes;
    if (direct == Tri::unknown) saw_unknown = true;
    for (const auto& w : *pool) {
      Tri t = inner->member(w * f, ideal_scale(w, I));
      if (t == Tri::yes) return Tri::yes;
      if (t == Tri::unknown) saw_unknown = true;
    }
    if (!saw_unknown && pool->empty()) return Tri::no;
    return Tri::unknown;
  };
  op.oracle_total = false;
  op.compute_total = c.compute_total;
  op.claims_standard = true;
  op.claims_weakly_prime = true;
  op.claims_finite_type = c.claims_finite_type;
  op.claims_closure = c.claims_closure && c.claims_finite_type && c.claims_weakly_prime;
  op.approx_note = "under-approximation(witnessed)";
  return op;
}

// ---------------------------------------------------------------------------
// samplers

Monomial random_monomial(int nvars, SplitMix64& rng, int max_degree) {
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  int degree = rng.range(0, max_degree);
  for (int d = 0; d < degree; ++d) ++e[rng.below(static_cast<uint64_t>(nvars))];
  return Monomial(std::move(e));
}

MonomialIdeal random_monomial_ideal(int nvars, SplitMix64& rng, int max_generators, int max_degree) {
  int count = rng.range(1, max_generators);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) {
    Monomial m = random_monomial(nvars, rng, max_degree);
    if (m.is_one()) {
      // avoid the unit ideal
      std::vector<int> e(static_cast<size_t>(nvars), 0);
      e[0] = rng.range(1, std::max(1, max_degree));
      m = Monomial(std::move(e));
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

Polynomial random_polynomial(const PolyRingPtr& ring, SplitMix64& rng, int max_degree, int max_terms) {
  int count = rng.range(1, max_terms);
  std::vector<Term> terms;
  for (int i = 0; i < count; ++i) {
    Monomial m = random_monomial(ring->nvars(), rng, max_degree);
    long c;
    if (ring->field().is_rationals()) {
      c = static_cast<long>(rng.range(-3, 3));
      if (c == 0) c = 1;
    } else {
      c = static_cast<long>(rng.below(static_cast<uint64_t>(ring->field().modulus() - 1))) + 1;
    }
    terms.push_back(Term{std::move(m), ring->field().from_long(c)});
  }
  return Polynomial::from_terms(ring, ring->grevlex(), std::move(terms));
}

Ideal random_ideal(const RingPtr& ring, SplitMix64& rng, int max_generators, int max_degree, int max_terms) {
  int count = rng.range(1, max_generators);
  std::vector<Polynomial> gens;
  for (int i = 0; i < count; ++i) {
    Polynomial p = random_polynomial(ring->cover(), rng, max_degree, max_terms);
    if (p.is_constant()) p = p * Polynomial::variable(ring->cover(), 0);
    gens.push_back(std::move(p));
  }
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// axiom checking

std::string AxiomWitness::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  if (w) {
    sep();
    os << "w = " << w->to_string();
  }
  if (ideal) {
    sep();
    os << "I = " << ideal->to_string();
  }
  if (subideal) {
    sep();
    os << "J = " << subideal->to_string();
  }
  if (f) {
    sep();
    os << "f = " << f->to_string();
  }
  return os.str();
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

bool AxiomReport::claimed_ok() const {
  return std::none_of(results.begin(), results.end(),
                      [](const AxiomResult& r) { return r.claimed && r.verdict == Verdict::failed; });
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  os << "axiom report for " << op_name << " (seed " << seed << ")\n";
  for (const auto& r : results) {
    os << "  " << r.axiom << ": " << verdict_name(r.verdict) << " (" << r.samples << " samples"
       << (r.claimed ? ", claimed" : "") << ")";
    if (r.witness) os << " witness: " << r.witness->to_string();
    if (!r.note.empty()) os << " [" << r.note << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

struct AxiomContext {
  const ClosureOp& c;
  const AxiomCheckConfig& cfg;
  std::vector<Ideal> samples;
  std::vector<RingElement> witness_pool;
};

// membership probes: 1, the variables, the first pairwise product, then the
// ideal's own generators
std::vector<RingElement> probe_pool(const AxiomContext& ctx, const Ideal& I) {
  const RingPtr& R = ctx.c.ring;
  std::vector<RingElement> pool;
  pool.push_back(R->one());
  int n = R->cover()->nvars();
  for (int i = 0; i < n; ++i) pool.push_back(R->var(i));
  if (n >= 2) pool.push_back(R->var(0) * R->var(1));
  for (const auto& g : I.canonical_generators()) pool.push_back(R->element(g));
  return pool;
}

// Greedy witness shrinking: drop generators of I while the violation (as
// re-tested by `still_fails`) persists.
Ideal shrink_ideal(const Ideal& I, const std::function<bool(const Ideal&)>& still_fails) {
  Ideal current = I;
  bool progress = true;
  while (progress) {
    progress = false;
    auto gens = current.canonical_generators();
    if (gens.size() <= 1) break;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<Polynomial> rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      Ideal smaller(current.ring(), std::move(rest));
      if (still_fails(smaller)) {
        current = smaller;
        progress = true;
        break;
      }
    }
  }
  return current;
}

void aggregate(Verdict& v, bool saw_unknown) {
  if (v == Verdict::failed) return;
  v = saw_unknown ? Verdict::not_refuted : Verdict::passed;
}

AxiomResult check_extension(AxiomContext& ctx) {
  AxiomResult res{"extension", Verdict::passed, 0, true, std::nullopt, ""};
  bool saw_unknown = false;
  for (const auto& I : ctx.samples) {
    ++res.samples;
    for (const auto& g : I.canonical_generators()) {
      Tri t = ctx.c.member(ctx.c.ring->element(g), I);
      if (t == Tri::no) {
        res.verdict = Verdict::failed;
        res.witness = AxiomWitness{I, std::nullopt, std::nullopt, ctx.c.ring->element(g)};
        return res;
      }
      if (t == Tri::unknown) saw_unknown = true;
    }
  }
  aggregate(res.verdict, saw_unknown);
  if (saw_unknown) res.note = "semi-decision oracle: some memberships unknown";
  return res;
}

AxiomResult check_order_preservation(AxiomContext& ctx, SplitMix64& rng) {
  AxiomResult res{"order-preservation", Verdict::passed, 0, true, std::nullopt, ""};
  bool saw_unknown = false;
  for (const auto& I : ctx.samples) {
    ++res.samples;
    // a random subideal: a nonempty subset of the generators, one scaled
    auto gens = I.canonical_generators();
    if (gens.empty()) continue;
    std::vector<Polynomial> sub;
    for (const auto& g : gens)
      if (rng.chance(1, 2)) sub.push_back(g);
    if (sub.empty()) sub.push_back(gens[0]);
    sub[0] = sub[0] * random_polynomial(ctx.c.ring->cover(), rng, 1, 1);
    Ideal J(ctx.c.ring, std::move(sub));

    auto jc = ctx.c.try_apply(J);
    auto ic = ctx.c.try_apply(I);
    if (jc && ic) {
      IdealRel rel = ideal_compare(*jc, *ic);
      if (rel != IdealRel::equal && rel != IdealRel::subset) {
        res.verdict = Verdict::failed;
        res.witness = AxiomWitness{I, J, std::nullopt, std::nullopt};
        return res;
      }
    } else {
      for (const auto& f : probe_pool(ctx, J)) {
        Tri tj = ctx.c.member(f, J);
        if (tj == Tri::unknown) saw_unknown = true;
        if (tj != Tri::yes) continue;
        Tri ti = ctx.c.member(f, I);
        if (ti == Tri::no) {
          res.verdict = Verdict::failed;
          res.witness = AxiomWitness{I, J, std::nullopt, f};
          return res;
        }
        if (ti == Tri::unknown) saw_unknown = true;
      }
    }
  }
  aggregate(res.verdict, saw_unknown);
  return res;
}

AxiomResult check_idempotence(AxiomContext& ctx) {
  AxiomResult res{"idempotence", Verdict::passed, 0, ctx.c.claims_closure, std::nullopt, ""};
  int skipped = 0;
  for (const auto& I : ctx.samples) {
    ++res.samples;
    auto ic = ctx.c.try_apply(I);
    if (ic) {
      auto icc = ctx.c.try_apply(*ic);
      if (icc) {
        if (!(ideal_compare(*icc, *ic) == IdealRel::equal)) {
          res.verdict = Verdict::failed;
          res.witness = AxiomWitness{I, std::nullopt, std::nullopt, std::nullopt};
          return res;
        }
        continue;
      }
    }
    if (!ctx.c.oracle_total) {
      // a bounded oracle cannot certify fixpoints on this sample
      ++skipped;
      continue;
    }
    // membership-level consequence of idempotence with order-preservation:
    // g in I^c and f in (I + (g))^c force f in I^c
    auto pool = probe_pool(ctx, I);
    for (const auto& g : pool) {
      if (ctx.c.member(g, I) != Tri::yes) continue;
      Ideal enlarged = ideal_sum(I, principal_ideal(g));
      for (const auto& f : pool) {
        if (ctx.c.member(f, enlarged) == Tri::yes && ctx.c.member(f, I) == Tri::no) {
          res.verdict = Verdict::failed;
          res.witness = AxiomWitness{I, enlarged, std::nullopt, f};
          return res;
        }
      }
    }
  }
  if (skipped > 0) {
    res.verdict = Verdict::not_refuted;
    res.note = "semi-decision oracle: " + std::to_string(skipped) + " samples not certifiable";
  }
  return res;
}

AxiomResult check_weakly_prime(AxiomContext& ctx, SplitMix64& rng) {
  (void)rng;
  AxiomResult res{"weakly-prime", Verdict::passed, 0, ctx.c.claims_weakly_prime, std::nullopt, ""};
  bool saw_unknown = false;
  if (ctx.witness_pool.empty()) {
    res.verdict = Verdict::not_refuted;
    res.note = "no regular witnesses available";
    return res;
  }
  for (const auto& I : ctx.samples) {
    const RingElement& w = ctx.witness_pool[static_cast<size_t>(res.samples) % ctx.witness_pool.size()];
    ++res.samples;
    Ideal wI = ideal_scale(w, I);
    for (const auto& f : probe_pool(ctx, I)) {
      Tri in_c = ctx.c.member(f, I);
      if (in_c == Tri::unknown) saw_unknown = true;
      if (in_c != Tri::yes) continue;
      Tri moved = ctx.c.member(w * f, wI);
      if (moved == Tri::no) {
        auto fails = [&](const Ideal& smaller) {
          return ctx.c.member(f, smaller) == Tri::yes &&
                 ctx.c.member(w * f, ideal_scale(w, smaller)) == Tri::no;
        };
        Ideal shrunk = shrink_ideal(I, fails);
        res.verdict = Verdict::failed;
        res.witness = AxiomWitness{shrunk, std::nullopt, w, f};
        return res;
      }
      if (moved == Tri::unknown) saw_unknown = true;
    }
  }
  aggregate(res.verdict, saw_unknown);
  return res;
}

AxiomResult check_standard(AxiomContext& ctx, SplitMix64& rng) {
  (void)rng;
  AxiomResult res{"standard", Verdict::passed, 0, ctx.c.claims_standard, std::nullopt, ""};
  bool saw_unknown = false;
  if (ctx.witness_pool.empty()) {
    res.verdict = Verdict::not_refuted;
    res.note = "no regular witnesses available";
    return res;
  }
  for (const auto& I : ctx.samples) {
    const RingElement& w = ctx.witness_pool[static_cast<size_t>(res.samples) % ctx.witness_pool.size()];
    ++res.samples;
    Ideal wI = ideal_scale(w, I);

    auto ic = ctx.c.try_apply(I);
    auto wic = ctx.c.try_apply(wI);
    if (ic && wic) {
      Ideal lhs = ideal_colon(*wic, w);
      if (!(ideal_compare(lhs, *ic) == IdealRel::equal)) {
        // find a discriminating element for the replayable witness
        std::optional<RingElement> disc;
        for (const auto& g : lhs.canonical_generators())
          if (!ideal_member(ctx.c.ring->element(g), *ic)) {
            disc = ctx.c.ring->element(g);
            break;
          }
        auto fails = [&](const Ideal& smaller) {
          auto sc = ctx.c.try_apply(smaller);
          auto wsc = ctx.c.try_apply(ideal_scale(w, smaller));
          if (!sc || !wsc) return false;
          return !(ideal_compare(ideal_colon(*wsc, w), *sc) == IdealRel::equal);
        };
        Ideal shrunk = shrink_ideal(I, fails);
        res.verdict = Verdict::failed;
        res.witness = AxiomWitness{shrunk, std::nullopt, w, disc};
        return res;
      }
      continue;
    }

    for (const auto& f : probe_pool(ctx, I)) {
      Tri lhs = ctx.c.member(w * f, wI);  // f in ((wI)^c : w)
      Tri rhs = ctx.c.member(f, I);
      if (lhs == Tri::unknown || rhs == Tri::unknown) {
        saw_unknown = true;
        continue;
      }
      if (lhs != rhs) {
        auto fails = [&](const Ideal& smaller) {
          Tri l = ctx.c.member(w * f, ideal_scale(w, smaller));
          Tri r = ctx.c.member(f, smaller);
          return l != Tri::unknown && r != Tri::unknown && l != r;
        };
        Ideal shrunk = shrink_ideal(I, fails);
        res.verdict = Verdict::failed;
        res.witness = AxiomWitness{shrunk, std::nullopt, w, f};
        return res;
      }
    }
  }
  aggregate(res.verdict, saw_unknown);
  return res;
}

}  // namespace

AxiomReport check_axioms(const ClosureOp& c, const AxiomCheckConfig& cfg) {
  AxiomReport report;
  report.op_name = c.name;
  report.seed = cfg.seed;

  WitnessSet pool = cfg.witnesses ? *cfg.witnesses : WitnessSet::default_pool(c.ring);

  AxiomContext ctx{c, cfg, {}, {pool.elements().begin(), pool.elements().end()}};

  SplitMix64 rng(cfg.seed);
  // principal ideals of the witness pool lead the sample list
  for (const auto& w : ctx.witness_pool) ctx.samples.push_back(principal_ideal(w));
  while (static_cast<int>(ctx.samples.size()) < cfg.samples) {
    if (cfg.monomial_samples) {
      MonomialIdeal mi = random_monomial_ideal(c.ring->cover()->nvars(), rng, cfg.max_generators, cfg.max_degree);
      ctx.samples.push_back(Ideal(c.ring, mi.to_polynomials(c.ring->cover())));
    } else {
      ctx.samples.push_back(random_ideal(c.ring, rng, cfg.max_generators, cfg.max_degree, cfg.max_terms));
    }
  }
  if (static_cast<int>(ctx.samples.size()) > cfg.samples)
    ctx.samples.erase(ctx.samples.begin() + cfg.samples, ctx.samples.end());

  report.results.push_back(check_extension(ctx));
  report.results.push_back(check_order_preservation(ctx, rng));
  report.results.push_back(check_idempotence(ctx));
  report.results.push_back(check_weakly_prime(ctx, rng));
  report.results.push_back(check_standard(ctx, rng));
  return report;
}

}  // namespace opal
