#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opal/groebner.hpp"
#include "opal/monomial_ideal.hpp"
#include "opal/polynomial.hpp"

namespace opal {

class PresentedRing;
class RingElement;
class Ideal;
using RingPtr = std::shared_ptr<const PresentedRing>;

// R = k[x1..xn]/J. Everything is computed in the covering polynomial ring S
// and interpreted modulo J; ideals of R are stored as preimages containing J.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
public:
  static RingPtr make(PolyRingPtr cover, std::vector<Polynomial> relations);
  static RingPtr make(Field k, std::vector<std::string> vars, const std::vector<std::string>& relation_texts = {});

  const PolyRingPtr& cover() const { return cover_; }
  const GroebnerBasis& relation_basis() const { return jbasis_; }
  std::span<const Polynomial> relations() const { return jbasis_.gens; }

  bool relations_trivial() const { return jbasis_.gens.empty(); }  // J = 0
  bool is_domain() const { return is_domain_; }
  bool relations_monomial() const { return relations_monomial_; }

  // Primary components and associated primes of J in the cover, available
  // exactly when J is monomial (or zero).
  const std::optional<std::vector<std::pair<MonomialIdeal, MonomialIdeal>>>& relation_components() const {
    return relation_components_;
  }

  RingElement element(const Polynomial& lift) const;
  RingElement element(std::string_view text) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement var(int index) const;

  Ideal ideal(std::vector<Polynomial> lifted_gens) const;
  Ideal ideal(const std::vector<std::string>& texts) const;
  Ideal ideal(std::initializer_list<const char*> texts) const;
  Ideal zero_ideal() const;
  Ideal unit_ideal() const;

  std::string to_string() const;  // "QQ[x,y,z]/(x^2, x*y)"

private:
  PresentedRing() = default;

  PolyRingPtr cover_;
  GroebnerBasis jbasis_{{}, MonomialOrder::grevlex(1), true};
  bool is_domain_ = false;
  bool relations_monomial_ = false;
  std::optional<std::vector<std::pair<MonomialIdeal, MonomialIdeal>>> relation_components_;
};

bool same_presented_ring(const PresentedRing& a, const PresentedRing& b);
bool same_presented_ring(const RingPtr& a, const RingPtr& b);

// Element of R by its canonical representative: the normal form of any lift
// modulo the relation basis. Equal elements have equal representatives.
class RingElement {
public:
  RingElement(RingPtr ring, const Polynomial& lift);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_unit_constant() const { return !rep_.is_zero() && rep_.is_constant(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement pow(int n) const;

  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  std::string to_string() const { return rep_.to_string(); }

private:
  RingPtr ring_;
  Polynomial rep_;
};

// Finitely generated ideal of R, held as its lifted preimage in the cover
// (always containing J) with a cached reduced Groebner basis.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> lifted_gens);

  const RingPtr& ring() const { return ring_; }
  const GroebnerBasis& basis() const { return basis_; }

  // Reduced-basis elements not lying in J, minus mutually redundant ones:
  // the canonical generator list of the ideal as an ideal of R.
  std::span<const Polynomial> canonical_generators() const { return canonical_; }

  bool is_zero() const { return canonical_.empty(); }
  bool is_unit() const { return basis_.contains_one(); }

  bool lift_is_monomial() const;
  MonomialIdeal monomial_lift() const;  // requires lift_is_monomial()

  bool operator==(const Ideal& o) const;

  std::string to_string() const;  // "(x, y*z)"

private:
  RingPtr ring_;
  GroebnerBasis basis_{{}, MonomialOrder::grevlex(1), true};
  std::vector<Polynomial> canonical_;
};

enum class IdealRel { equal, subset, superset, incomparable };

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int n);  // I^0 = R
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_colon(const Ideal& I, const RingElement& f);  // (I : f); (I : 0) = R
Ideal ideal_colon(const Ideal& I, const Ideal& J);
Ideal ideal_scale(const RingElement& w, const Ideal& I);  // w*I
Ideal principal_ideal(const RingElement& w);

bool ideal_member(const RingElement& f, const Ideal& I);
IdealRel ideal_compare(const Ideal& I, const Ideal& J);

// f in rad(I), decided exactly by the Rabinowitsch test in S[t].
bool radical_member(const RingElement& f, const Ideal& I);

// w is a non-zerodivisor of R, decided exactly by (J : w) = J in the cover.
bool is_regular(const RingElement& w);

// Deterministic total order on ideals of one ring (for canonical listings).
int compare_canonical(const Ideal& a, const Ideal& b);

}  // namespace opal
