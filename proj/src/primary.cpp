#include "opal/primary.hpp"

#include <algorithm>
#include <sstream>

namespace opal {

std::string PrimaryDecomposition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << " ∩ ";
    os << components[i].primary.to_string();
  }
  os << "  primes: {";
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << ", ";
    os << components[i].prime.to_string();
  }
  os << "}";
  return os.str();
}

PrimaryDecomposition monomial_primary_decomposition(const Ideal& I) {
  const RingPtr& R = I.ring();
  if (I.is_unit()) fail(Errc::invalid_argument, "the unit ideal has no primary decomposition");
  if (!R->relations_monomial())
    fail(Errc::unsupported_computation,
         "monomial decomposition needs a monomial (or zero) relation ideal; supply a decomposition instead");
  if (!I.lift_is_monomial())
    fail(Errc::unsupported_computation,
         "ideal lift is not monomial: " + I.to_string() + "; supply a decomposition instead");

  MonomialIdeal lift = I.monomial_lift();
  auto mono_components = monomial_primary_components(lift);

  PrimaryDecomposition D{I, {}, DecompositionProvenance::computed_monomial, false};
  for (auto& [q, p] : mono_components) {
    PrimaryComponent comp{
        Ideal(R, q.to_polynomials(R->cover())),
        Ideal(R, p.to_polynomials(R->cover())),
        VerifyStatus::verified,  // q ⊆ p: squarefree parts divide generators
        VerifyStatus::verified,  // p = rad(q): exact for monomial ideals
        monomial_is_prime(p) ? VerifyStatus::verified : VerifyStatus::assumed,
    };
    D.components.push_back(std::move(comp));
  }

  // the intersection is always re-verified exactly
  Ideal meet = R->unit_ideal();
  for (const auto& c : D.components) meet = ideal_intersect(meet, c.primary);
  if (!(ideal_compare(meet, I) == IdealRel::equal))
    fail(Errc::verification_failed, "component intersection does not reproduce the ideal");
  D.intersection_verified = true;
  return D;
}

std::vector<Ideal> associated_primes(const PrimaryDecomposition& D) {
  if (!D.intersection_verified)
    fail(Errc::verification_failed,
         "decomposition is unverified: intersection check has not been run");
  std::vector<Ideal> primes;
  for (const auto& c : D.components) {
    bool seen = false;
    for (const auto& p : primes)
      if (ideal_compare(p, c.prime) == IdealRel::equal) {
        seen = true;
        break;
      }
    if (!seen) primes.push_back(c.prime);
  }
  std::sort(primes.begin(), primes.end(),
            [](const Ideal& a, const Ideal& b) { return compare_canonical(a, b) < 0; });
  return primes;
}

}  // namespace opal
