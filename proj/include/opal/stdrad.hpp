#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opal/primary.hpp"
#include "opal/ring.hpp"

namespace opal {

// Associated primes of the relation ideal J, as ideals of R. Available
// exactly when J is monomial or zero; classification refuses otherwise.
struct RelationPrimes {
  std::vector<Ideal> primes;
  bool verified = false;
  std::string source;
};

RelationPrimes relation_associated_primes(const RingPtr& ring);

struct ComponentClassification {
  enum class Kind { all_zero_divisors, contains_regular };
  int index = 0;
  Kind kind = Kind::contains_regular;
  std::optional<Ideal> containing_prime;       // all_zero_divisors: the Ass(J) member with q ⊆ p
  std::optional<RingElement> regular_witness;  // contains_regular: a regular canonical generator, if any

  std::string to_string() const;
};

// q consists of zero-divisors iff q ⊆ p for some p in Ass(J); this is both
// sound and complete by prime avoidance.
ComponentClassification classify_component(const Ideal& q, const RelationPrimes& assJ, int index = 0);

// Verifies a user-supplied decomposition of I: exact intersection check,
// q_i ⊆ p_i and p_i ⊆ rad(q_i) on generators; primality (and primary-ness)
// checked exactly for monomial components, else recorded as assumed.
PrimaryDecomposition verify_decomposition(const Ideal& I, const std::vector<std::pair<Ideal, Ideal>>& components);

struct StandardizedRadicalResult {
  Ideal result;
  PrimaryDecomposition decomposition;
  std::vector<ComponentClassification> classifications;
  bool any_assumed = false;  // some component carries an assumed status
};

// The smallest standard closure above radical, computed per the primary
// decomposition rule: intersect the radicals of exactly the components that
// consist of zero-divisors; the unit ideal when no component qualifies.
StandardizedRadicalResult standardized_radical_full(const Ideal& I,
                                                    const std::optional<PrimaryDecomposition>& D = std::nullopt);
Ideal standardized_radical(const Ideal& I, const std::optional<PrimaryDecomposition>& D = std::nullopt);

}  // namespace opal
