#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opal/primary.hpp"
#include "opal/ring.hpp"
#include "opal/rng.hpp"

namespace opal {

// Three-valued membership verdict. Semi-decision oracles never answer a
// false "yes"; they answer unknown instead of "no".
enum class Tri { no, yes, unknown };

inline const char* tri_name(Tri t) { return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown"; }

// Finite set of verified non-zerodivisors, the computable surrogate for the
// standardization union's index set.
class WitnessSet {
public:
  explicit WitnessSet(std::vector<RingElement> elements);  // throws non-regular-witness

  // Variables and their pairwise products, filtered through is_regular.
  static WitnessSet default_pool(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  std::span<const RingElement> elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }

  WitnessSet with(const RingElement& extra) const;

  std::string to_string() const;

private:
  WitnessSet() = default;
  RingPtr ring_;
  std::vector<RingElement> elements_;
};

// A named closure (or preclosure) operation: membership oracle, optional
// closure computer, capability flags and declared property claims. When the
// computer applies to an ideal, the oracle agrees with membership in its
// output.
struct ClosureOp {
  std::string name;
  RingPtr ring;

  std::function<Tri(const RingElement&, const Ideal&)> member_fn;
  std::function<std::optional<Ideal>(const Ideal&)> compute_fn;  // may be empty

  bool oracle_total = true;                // member never answers unknown
  std::optional<int> semi_decision_bound;  // set when the oracle is bounded search
  bool compute_total = false;              // computer defined on every ideal

  // declared property claims
  bool claims_closure = true;  // idempotent, vs mere preclosure
  bool claims_finite_type = true;
  bool claims_weakly_prime = true;
  bool claims_standard = false;

  std::optional<std::string> approx_note;  // present when results under-approximate

  Tri member(const RingElement& f, const Ideal& I) const;
  bool has_computer() const { return static_cast<bool>(compute_fn); }
  std::optional<Ideal> try_apply(const Ideal& I) const;
  Ideal apply(const Ideal& I) const;  // unsupported-computation names the oracle alternative
};

ClosureOp identity_closure(RingPtr ring);
ClosureOp radical_closure(RingPtr ring);
// Integral closure with the exact Newton-polyhedron computer on monomial
// ideals of a polynomial ring; bounded power search elsewhere.
ClosureOp integral_closure_op(RingPtr ring, int power_bound = 6);
ClosureOp frobenius_closure(RingPtr ring, int e_max);

// CLI-facing constructor: identity | radical | integral | frobenius(e_max).
ClosureOp construct_builtin(const std::string& which, RingPtr ring, std::optional<long> parameter = std::nullopt);

// The finitization c_f. On representable (always finitely generated) inputs
// it coincides with c by taking J = I in the defining union.
ClosureOp finitize(const ClosureOp& c);

// The witnessed standardization I -> sum over w in W∪{1} of ((wI)^c : w), an
// under-approximation of c_s that contains I^c and is monotone in W.
ClosureOp standardize_witnessed(const ClosureOp& c, const WitnessSet& witnesses);

// ---------------------------------------------------------------------------
// axiom checking

enum class Verdict { passed, failed, not_refuted };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::passed ? "passed" : v == Verdict::failed ? "failed" : "not refuted";
}

struct AxiomWitness {
  std::optional<Ideal> ideal;     // I
  std::optional<Ideal> subideal;  // J (order-preservation)
  std::optional<RingElement> w;
  std::optional<RingElement> f;
  std::string to_string() const;
};

struct AxiomResult {
  std::string axiom;
  Verdict verdict = Verdict::passed;
  int samples = 0;
  bool claimed = false;
  std::optional<AxiomWitness> witness;
  std::string note;
};

struct AxiomReport {
  std::string op_name;
  uint64_t seed = 0;
  std::vector<AxiomResult> results;

  const AxiomResult* find(const std::string& axiom) const;
  bool claimed_ok() const;  // no claimed axiom failed
  std::string to_string() const;
};

struct AxiomCheckConfig {
  int samples = 100;
  int max_generators = 3;
  int max_degree = 3;
  int max_terms = 3;
  bool monomial_samples = false;  // sample monomial ideals (exact computer paths)
  uint64_t seed = 42;
  std::optional<WitnessSet> witnesses;  // default_pool when absent
};

// Samples ideals (principal ideals of the witness pool first, then random
// ones), tests the five defining properties, and shrinks failures greedily.
AxiomReport check_axioms(const ClosureOp& c, const AxiomCheckConfig& cfg);

// deterministic samplers shared with the test suites
Polynomial random_polynomial(const PolyRingPtr& ring, SplitMix64& rng, int max_degree, int max_terms);
Ideal random_ideal(const RingPtr& ring, SplitMix64& rng, int max_generators, int max_degree, int max_terms);
Monomial random_monomial(int nvars, SplitMix64& rng, int max_degree);
MonomialIdeal random_monomial_ideal(int nvars, SplitMix64& rng, int max_generators, int max_degree);

}  // namespace opal
