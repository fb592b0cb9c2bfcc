#include "opal/stdrad.hpp"

#include <sstream>

namespace opal {

RelationPrimes relation_associated_primes(const RingPtr& ring) {
  RelationPrimes out;
  if (ring->relations_trivial()) {
    out.primes.push_back(ring->zero_ideal());
    out.verified = true;
    out.source = "zero relation ideal (domain)";
    return out;
  }
  if (!ring->relation_components()) {
    out.verified = false;
    out.source = "relation ideal is not monomial; no decomposition available";
    return out;
  }
  for (const auto& [q, p] : *ring->relation_components())
    out.primes.push_back(Ideal(ring, p.to_polynomials(ring->cover())));
  out.verified = true;
  out.source = "monomial decomposition of the relation ideal";
  return out;
}

std::string ComponentClassification::to_string() const {
  std::ostringstream os;
  os << "component " << index << ": ";
  if (kind == Kind::all_zero_divisors) {
    os << "all-zero-divisors";
    if (containing_prime) os << " (contained in " << containing_prime->to_string() << ")";
  } else {
    os << "contains-regular";
    if (regular_witness) os << " (witness " << regular_witness->to_string() << ")";
  }
  return os.str();
}

ComponentClassification classify_component(const Ideal& q, const RelationPrimes& assJ, int index) {
  if (!assJ.verified)
    fail(Errc::verification_failed, "associated primes of the relations are unverified: " + assJ.source);
  ComponentClassification out;
  out.index = index;
  for (const auto& p : assJ.primes) {
    IdealRel rel = ideal_compare(q, p);
    if (rel == IdealRel::equal || rel == IdealRel::subset) {
      out.kind = ComponentClassification::Kind::all_zero_divisors;
      out.containing_prime = p;
      return out;
    }
  }
  out.kind = ComponentClassification::Kind::contains_regular;
  for (const auto& g : q.canonical_generators()) {
    RingElement el = q.ring()->element(g);
    if (is_regular(el)) {
      out.regular_witness = el;
      break;
    }
  }
  return out;
}

PrimaryDecomposition verify_decomposition(const Ideal& I,
                                          const std::vector<std::pair<Ideal, Ideal>>& components) {
  if (components.empty()) fail(Errc::invalid_argument, "empty component list");
  for (const auto& [q, p] : components) {
    if (!same_presented_ring(q.ring(), I.ring()) || !same_presented_ring(p.ring(), I.ring()))
      fail(Errc::incompatible_ring, "component outside the ideal's ring");
  }

  PrimaryDecomposition D{I, {}, DecompositionProvenance::user_supplied, false};
  Ideal meet = I.ring()->unit_ideal();
  for (const auto& [q, p] : components) meet = ideal_intersect(meet, q);
  if (!(ideal_compare(meet, I) == IdealRel::equal))
    fail(Errc::verification_failed, "rejected: component intersection is " + meet.to_string() +
                                        " but the ideal is " + I.to_string());

  int idx = 0;
  for (const auto& [q, p] : components) {
    ++idx;
    // q ⊆ p, exactly
    for (const auto& g : q.canonical_generators())
      if (!ideal_member(q.ring()->element(g), p))
        fail(Errc::verification_failed, "rejected: component " + std::to_string(idx) + ": generator " +
                                            g.to_string() + " of q lies outside p = " + p.to_string());
    // p ⊆ rad(q), exactly (with q ⊆ p and p prime this pins p = rad(q))
    for (const auto& g : p.canonical_generators())
      if (!radical_member(p.ring()->element(g), q))
        fail(Errc::verification_failed, "rejected: component " + std::to_string(idx) + ": generator " +
                                            g.to_string() + " of p is not in rad(q), q = " + q.to_string());

    PrimaryComponent comp{q, p, VerifyStatus::verified, VerifyStatus::assumed, VerifyStatus::assumed};
    if (p.lift_is_monomial()) {
      // exact primality test for monomial primes; non-primes are rejected
      if (!monomial_is_prime(p.monomial_lift()))
        fail(Errc::verification_failed,
             "rejected: component " + std::to_string(idx) + ": p = " + p.to_string() +
                 " is monomial but not prime (not generated by variables)");
      comp.p_is_prime = VerifyStatus::verified;
    }
    if (q.lift_is_monomial()) {
      if (!monomial_is_primary(q.monomial_lift()))
        fail(Errc::verification_failed, "rejected: component " + std::to_string(idx) + ": q = " +
                                            q.to_string() + " is monomial but not primary");
      // the radical of a monomial lift is exactly computable: pin p = rad(q)
      Ideal radq(q.ring(), monomial_radical(q.monomial_lift()).to_polynomials(q.ring()->cover()));
      if (!(ideal_compare(radq, p) == IdealRel::equal))
        fail(Errc::verification_failed, "rejected: component " + std::to_string(idx) + ": rad(q) = " +
                                            radq.to_string() + " differs from p = " + p.to_string());
      comp.p_is_radical_of_q = VerifyStatus::verified;
    } else if (comp.p_is_prime == VerifyStatus::verified) {
      // q ⊆ p with p prime gives rad(q) ⊆ p; p ⊆ rad(q) was checked above
      comp.p_is_radical_of_q = VerifyStatus::verified;
    }
    D.components.push_back(std::move(comp));
  }
  D.intersection_verified = true;
  return D;
}

StandardizedRadicalResult standardized_radical_full(const Ideal& I,
                                                    const std::optional<PrimaryDecomposition>& D) {
  const RingPtr& R = I.ring();

  if (I.is_unit()) {
    PrimaryDecomposition trivial{I, {}, DecompositionProvenance::computed_monomial, true};
    return StandardizedRadicalResult{R->unit_ideal(), std::move(trivial), {}, false};
  }

  PrimaryDecomposition decomp =
      D ? *D
        : monomial_primary_decomposition(I);  // throws unsupported_computation with instructions if not applicable
  if (!decomp.intersection_verified)
    fail(Errc::verification_failed, "decomposition must be verified before use");

  RelationPrimes assJ = relation_associated_primes(R);
  if (!assJ.verified)
    fail(Errc::unsupported_computation,
         "cannot classify components: " + assJ.source + "; a monomial relation ideal is required");

  StandardizedRadicalResult out{R->unit_ideal(), decomp, {}, false};
  int idx = 0;
  for (const auto& comp : decomp.components) {
    ComponentClassification cls = classify_component(comp.primary, assJ, idx++);
    if (cls.kind == ComponentClassification::Kind::all_zero_divisors)
      out.result = ideal_intersect(out.result, comp.prime);
    if (comp.p_is_prime == VerifyStatus::assumed || comp.p_is_radical_of_q == VerifyStatus::assumed ||
        comp.q_contained_in_p == VerifyStatus::assumed)
      out.any_assumed = true;
    out.classifications.push_back(std::move(cls));
  }
  return out;
}

Ideal standardized_radical(const Ideal& I, const std::optional<PrimaryDecomposition>& D) {
  return standardized_radical_full(I, D).result;
}

}  // namespace opal
