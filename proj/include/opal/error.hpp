#pragma once

#include <stdexcept>
#include <string>

namespace opal {

enum class Errc {
  incompatible_ring,
  zero_polynomial,
  incompatible_order,
  invalid_elimination,
  capability_mismatch,
  unsupported_computation,
  non_regular_witness,
  invalid_presentation,
  verification_failed,
  budget_exceeded,
  parse_error,
  undefined_name,
  invalid_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::incompatible_ring: return "incompatible-ring";
    case Errc::zero_polynomial: return "zero-polynomial";
    case Errc::incompatible_order: return "incompatible-order";
    case Errc::invalid_elimination: return "invalid-elimination";
    case Errc::capability_mismatch: return "capability-mismatch";
    case Errc::unsupported_computation: return "unsupported-computation";
    case Errc::non_regular_witness: return "non-regular-witness";
    case Errc::invalid_presentation: return "invalid-presentation";
    case Errc::verification_failed: return "verification-failed";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::parse_error: return "parse-error";
    case Errc::undefined_name: return "undefined-name";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace opal
