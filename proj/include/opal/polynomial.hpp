#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opal/monomial.hpp"
#include "opal/scalar.hpp"

namespace opal {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// The covering polynomial ring k[x1..xn]. Presented rings quotient this.
class PolyRing {
public:
  static PolyRingPtr make(Field k, std::vector<std::string> vars);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  std::span<const std::string> var_names() const { return vars_; }
  int var_index(std::string_view name) const;  // -1 if absent

  MonomialOrder grevlex() const { return MonomialOrder::grevlex(nvars()); }
  MonomialOrder lex() const { return MonomialOrder::lex(nvars()); }

  // Ring with one fresh tag variable prepended (significance slot 0).
  PolyRingPtr extended_front(const std::string& base_name = "@t") const;

  std::string to_string() const;  // e.g. "QQ[x,y,z]"

private:
  PolyRing(Field k, std::vector<std::string> vars) : field_(k), vars_(std::move(vars)) {}
  Field field_;
  std::vector<std::string> vars_;
};

bool same_ring(const PolyRing& a, const PolyRing& b);
bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Immutable canonical polynomial: terms strictly descending in the carried
// order, no zero coefficients, no duplicate monomials. The zero polynomial
// is the empty term list.
class Polynomial {
public:
  static Polynomial zero(PolyRingPtr ring, MonomialOrder ord);
  static Polynomial zero(PolyRingPtr ring);
  static Polynomial constant(PolyRingPtr ring, Scalar c);
  static Polynomial constant(PolyRingPtr ring, long c);
  static Polynomial variable(PolyRingPtr ring, int index);
  static Polynomial from_monomial(PolyRingPtr ring, Monomial m, Scalar c);
  static Polynomial from_terms(PolyRingPtr ring, MonomialOrder ord, std::vector<Term> terms);

  // Parses the canonical text syntax: terms joined by + and -, * for
  // products, ^ for powers, integer or a/b literals.
  static Polynomial parse(const PolyRingPtr& ring, std::string_view text);

  const PolyRingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  std::span<const Term> terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  int total_degree() const;  // -1 for the zero polynomial

  const Term& leading() const;  // order-maximal term; throws on zero
  Polynomial tail() const;      // everything after the leading term

  Polynomial with_order(const MonomialOrder& ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(int n) const;
  Polynomial monic() const;  // throws on zero

  bool depends_on(int var) const;

  // Maps between a ring and its one-variable front extension.
  Polynomial lifted_front(const PolyRingPtr& bigger) const;
  Polynomial dropped_front(const PolyRingPtr& smaller) const;

  // Order-insensitive structural equality over the same ring.
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Polynomial(PolyRingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(std::move(ord)) {}

  PolyRingPtr ring_;
  MonomialOrder ord_;
  std::vector<Term> terms_;
};

// The order-maximal term of f under ord; throws zero-polynomial on f = 0.
Term leading_term(const Polynomial& f, const MonomialOrder& ord);

// Deterministic total order on canonical polynomials (for sorting bases).
int polynomial_cmp(const Polynomial& a, const Polynomial& b);

}  // namespace opal
