#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opal/monomial_ideal.hpp"
#include "opal/ring.hpp"

namespace opal {

enum class VerifyStatus { verified, assumed };

inline const char* verify_status_name(VerifyStatus s) {
  return s == VerifyStatus::verified ? "verified" : "assumed";
}

struct PrimaryComponent {
  Ideal primary;  // q_i
  Ideal prime;    // p_i = rad(q_i)
  VerifyStatus q_contained_in_p = VerifyStatus::assumed;
  VerifyStatus p_is_radical_of_q = VerifyStatus::assumed;
  VerifyStatus p_is_prime = VerifyStatus::assumed;
};

enum class DecompositionProvenance { computed_monomial, user_supplied };

struct PrimaryDecomposition {
  Ideal target;
  std::vector<PrimaryComponent> components;
  DecompositionProvenance provenance = DecompositionProvenance::user_supplied;
  bool intersection_verified = false;

  std::string to_string() const;
};

// Primary decomposition of an ideal whose lift is monomial, interpreted in
// the quotient: components of the lifted decomposition, taken mod J. The
// ring's relation ideal must itself be monomial (or zero) so primary-ness
// survives the quotient checkably.
PrimaryDecomposition monomial_primary_decomposition(const Ideal& I);

// The distinct radicals p_i, canonically ordered. Refuses unverified input.
std::vector<Ideal> associated_primes(const PrimaryDecomposition& D);

}  // namespace opal
