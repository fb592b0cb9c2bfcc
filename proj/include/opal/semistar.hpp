#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opal/closure.hpp"
#include "opal/ring.hpp"

namespace opal {

// A fraction r/z of ring elements with regular denominator: an element of
// the total ring of fractions Q.
struct Fraction {
  RingElement num;
  RingElement den;

  static Fraction over_one(const RingElement& r);
  std::string to_string() const;
};

// Finitely generated R-submodule (1/d)·N of Q with d regular: the
// representable fragment of the fractional ideals of R.
class FractionalIdeal {
public:
  FractionalIdeal(Ideal numerator, RingElement denominator);  // verifies the denominator is regular

  const Ideal& numerator() const { return num_; }
  const RingElement& denominator() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  std::string to_string() const;

private:
  Ideal num_;
  RingElement den_;
};

// Cross-multiplied equality: d2*N1 = d1*N2 as ideals.
bool frac_equal(const FractionalIdeal& A, const FractionalIdeal& B);

// u*A for a regular fraction u = r/z.
FractionalIdeal frac_scale(const FractionalIdeal& A, const Fraction& u);

// A named semistar operation, exposed as a membership oracle on fractions.
// All representable constructions here are of finite type.
class SemistarOp {
public:
  SemistarOp(std::string name, std::function<Tri(const Fraction&, const FractionalIdeal&)> member,
             std::optional<ClosureOp> origin = std::nullopt);

  const std::string& name() const { return name_; }
  bool finite_type() const { return true; }
  Tri member(const Fraction& f, const FractionalIdeal& A) const;

  // The standard closure the operation was built from, when it was.
  const std::optional<ClosureOp>& origin() const { return origin_; }

private:
  std::string name_;
  std::function<Tri(const Fraction&, const FractionalIdeal&)> member_;
  std::optional<ClosureOp> origin_;
};

// f = r/z lies in A_pi(c) iff d*r lies in (z * dA)^c, where d is A's
// denominator (so dA is the numerator ideal inside R). Well-defined,
// independent of the choices, when c is standard.
Tri pi_member(const ClosureOp& c, const Fraction& f, const FractionalIdeal& A);

// sigma_f(c): the finite-type semistar operation whose membership is pi(c).
// On representable (finitely generated) inputs the defining union over
// submodules B ⊆ A collapses to B = A by monotonicity of pi.
SemistarOp sigma_f(const ClosureOp& c);

// kappa(star): I -> I_star ∩ R, as a membership oracle...
Tri kappa_member(const SemistarOp& star, const RingElement& r, const Ideal& I);
// ...the full ideal when star carries a closure computer...
std::optional<Ideal> kappa_ideal(const SemistarOp& star, const Ideal& I);
// ...and as a first-class closure operation.
ClosureOp kappa(const SemistarOp& star);

// The b-operation: integral-equation membership over a domain. Exact on
// monomial data via the Newton polyhedron, bounded power search elsewhere.
Tri b_member(const Fraction& f, const FractionalIdeal& A);

struct CorrespondenceConfig {
  int ideal_samples = 30;
  int max_generators = 3;
  int max_degree = 6;
  int probe_degree = 6;  // membership sweep bound
  uint64_t seed = 42;
};

struct CorrespondencePart {
  std::string name;
  bool passed = true;
  int checks = 0;
  std::string failure;  // replayable description of the first mismatch
};

struct CorrespondenceReport {
  std::string op_name;
  uint64_t seed = 0;
  std::vector<CorrespondencePart> parts;
  bool ok() const;
  std::string to_string() const;
};

// Round trips kappa(sigma_f(c)) = c and sigma_f(kappa(sigma_f(c))) =
// sigma_f(c) on monomial samples, plus order preservation of sigma_f across
// identity <= integral <= radical.
CorrespondenceReport check_correspondence(const ClosureOp& c, const CorrespondenceConfig& cfg);

}  // namespace opal
