#include "opal/ring.hpp"

#include <algorithm>
#include <sstream>

namespace opal {

namespace {

std::string join_polys(std::span<const Polynomial> ps) {
  std::ostringstream os;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ", ";
    os << ps[i].to_string();
  }
  return os.str();
}

}  // namespace

RingPtr PresentedRing::make(PolyRingPtr cover, std::vector<Polynomial> relations) {
  auto ring = std::shared_ptr<PresentedRing>(new PresentedRing());
  ring->cover_ = cover;
  for (const auto& r : relations)
    if (!same_ring(r.ring(), cover)) fail(Errc::incompatible_ring, "relation outside the covering ring");

  std::erase_if(relations, [](const Polynomial& p) { return p.is_zero(); });
  if (relations.empty()) {
    ring->jbasis_ = GroebnerBasis{{}, cover->grevlex(), true};
    ring->is_domain_ = true;
    ring->relations_monomial_ = true;  // the zero ideal is (vacuously) monomial
    ring->relation_components_ = {{std::make_pair(MonomialIdeal(cover->nvars()), MonomialIdeal(cover->nvars()))}};
    return ring;
  }

  ring->jbasis_ = reduced_groebner_basis(relations, cover->grevlex());
  if (ring->jbasis_.contains_one()) fail(Errc::invalid_presentation, "relations generate the unit ideal");

  ring->relations_monomial_ =
      std::all_of(ring->jbasis_.gens.begin(), ring->jbasis_.gens.end(),
                  [](const Polynomial& p) { return p.is_single_term(); });
  if (ring->relations_monomial_) {
    MonomialIdeal J = monomial_ideal_of(ring->jbasis_.gens);
    ring->is_domain_ = monomial_is_prime(J);
    ring->relation_components_ = monomial_primary_components(J);
  } else {
    ring->is_domain_ = false;  // unknown in general; never claimed
    ring->relation_components_ = std::nullopt;
  }
  return ring;
}

RingPtr PresentedRing::make(Field k, std::vector<std::string> vars,
                            const std::vector<std::string>& relation_texts) {
  PolyRingPtr cover = PolyRing::make(k, std::move(vars));
  std::vector<Polynomial> rels;
  rels.reserve(relation_texts.size());
  for (const auto& t : relation_texts) rels.push_back(Polynomial::parse(cover, t));
  return make(cover, std::move(rels));
}

RingElement PresentedRing::element(const Polynomial& lift) const {
  return RingElement(shared_from_this(), lift);
}

RingElement PresentedRing::element(std::string_view text) const {
  return element(Polynomial::parse(cover_, text));
}

RingElement PresentedRing::zero() const { return element(Polynomial::zero(cover_)); }
RingElement PresentedRing::one() const { return element(Polynomial::constant(cover_, 1)); }
RingElement PresentedRing::var(int index) const { return element(Polynomial::variable(cover_, index)); }

Ideal PresentedRing::ideal(std::vector<Polynomial> lifted_gens) const {
  return Ideal(shared_from_this(), std::move(lifted_gens));
}

Ideal PresentedRing::ideal(const std::vector<std::string>& texts) const {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(Polynomial::parse(cover_, t));
  return ideal(std::move(gens));
}

Ideal PresentedRing::ideal(std::initializer_list<const char*> texts) const {
  std::vector<std::string> v;
  for (const char* t : texts) v.emplace_back(t);
  return ideal(v);
}

Ideal PresentedRing::zero_ideal() const { return ideal(std::vector<Polynomial>{}); }
Ideal PresentedRing::unit_ideal() const { return ideal({Polynomial::constant(cover_, 1)}); }

std::string PresentedRing::to_string() const {
  std::string s = cover_->to_string();
  if (!relations_trivial()) {
    std::vector<Polynomial> rels(jbasis_.gens.begin(), jbasis_.gens.end());
    std::sort(rels.begin(), rels.end(), [this](const Polynomial& a, const Polynomial& b) {
      const Monomial& ma = a.leading().mono;
      const Monomial& mb = b.leading().mono;
      if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
      return cover_->grevlex().greater(ma, mb);
    });
    s += "/(" + join_polys(rels) + ")";
  }
  return s;
}

bool same_presented_ring(const PresentedRing& a, const PresentedRing& b) {
  if (&a == &b) return true;
  if (!same_ring(a.cover(), b.cover())) return false;
  auto ra = a.relations(), rb = b.relations();
  return std::equal(ra.begin(), ra.end(), rb.begin(), rb.end());
}

bool same_presented_ring(const RingPtr& a, const RingPtr& b) { return same_presented_ring(*a, *b); }

namespace {
void check_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_presented_ring(a, b)) fail(Errc::incompatible_ring, "operands belong to different rings");
}
}  // namespace

RingElement::RingElement(RingPtr ring, const Polynomial& lift)
    : ring_(std::move(ring)), rep_(normal_form(lift.with_order(ring_->cover()->grevlex()), ring_->relation_basis())) {}

RingElement RingElement::operator+(const RingElement& o) const {
  check_ring(ring_, o.ring_);
  return RingElement(ring_, rep_ + o.rep_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_ring(ring_, o.ring_);
  return RingElement(ring_, rep_ - o.rep_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_ring(ring_, o.ring_);
  return RingElement(ring_, rep_ * o.rep_);
}

RingElement RingElement::operator-() const { return RingElement(ring_, -rep_); }

RingElement RingElement::pow(int n) const {
  if (n < 0) fail(Errc::invalid_argument, "negative element power");
  RingElement acc = ring_->one();
  RingElement base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

bool RingElement::operator==(const RingElement& o) const {
  return same_presented_ring(ring_, o.ring_) && rep_ == o.rep_;
}

// ---------------------------------------------------------------------------
// Ideal

namespace {

// g lies in <gens> + J, via a scratch basis (no Ideal construction: this is
// the redundancy filter used *during* Ideal construction).
bool member_of_span(const Polynomial& g, std::vector<Polynomial> gens, const PresentedRing& ring) {
  for (const auto& r : ring.relations()) gens.push_back(r);
  if (gens.empty()) return g.is_zero();
  GroebnerBasis B = reduced_groebner_basis(gens, ring.cover()->grevlex());
  return normal_form(g, B).is_zero();
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> lifted_gens) : ring_(std::move(ring)) {
  const PolyRingPtr& cover = ring_->cover();
  for (const auto& g : lifted_gens)
    if (!same_ring(g.ring(), cover)) fail(Errc::incompatible_ring, "generator outside the covering ring");

  std::vector<Polynomial> gens;
  gens.reserve(lifted_gens.size() + ring_->relations().size());
  for (auto& g : lifted_gens)
    if (!g.is_zero()) gens.push_back(g.with_order(cover->grevlex()));
  for (const auto& r : ring_->relations()) gens.push_back(r);

  if (gens.empty())
    basis_ = GroebnerBasis{{}, cover->grevlex(), true};
  else
    basis_ = reduced_groebner_basis(gens, cover->grevlex());

  // canonical generators: basis elements outside J...
  std::vector<Polynomial> candidates;
  for (const auto& g : basis_.gens)
    if (!normal_form(g, ring_->relation_basis()).is_zero()) candidates.push_back(g);

  // ...minus mutually redundant ones (monomial bases are already minimal)
  bool all_monomial = std::all_of(basis_.gens.begin(), basis_.gens.end(),
                                  [](const Polynomial& p) { return p.is_single_term(); });
  if (!all_monomial && candidates.size() > 1) {
    for (size_t i = candidates.size(); i-- > 0;) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < candidates.size(); ++j)
        if (j != i) others.push_back(candidates[j]);
      if (member_of_span(candidates[i], std::move(others), *ring_))
        candidates.erase(candidates.begin() + static_cast<long>(i));
    }
  }
  // presentation order: ascending degree, then descending within a degree,
  // so (x, y*z) and (x^2, x*y) both read naturally
  std::sort(candidates.begin(), candidates.end(), [this](const Polynomial& a, const Polynomial& b) {
    const Monomial& ma = a.leading().mono;
    const Monomial& mb = b.leading().mono;
    if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
    return ring_->cover()->grevlex().greater(ma, mb);
  });
  canonical_ = std::move(candidates);
}

bool Ideal::lift_is_monomial() const {
  return std::all_of(basis_.gens.begin(), basis_.gens.end(),
                     [](const Polynomial& p) { return p.is_single_term(); });
}

MonomialIdeal Ideal::monomial_lift() const {
  if (!lift_is_monomial()) fail(Errc::unsupported_computation, "ideal lift is not monomial: " + to_string());
  if (basis_.gens.empty()) return MonomialIdeal(ring_->cover()->nvars());
  return monomial_ideal_of(basis_.gens);
}

bool Ideal::operator==(const Ideal& o) const { return ideal_compare(*this, o) == IdealRel::equal; }

std::string Ideal::to_string() const {
  if (canonical_.empty()) return "(0)";
  if (is_unit()) return "(1)";
  return "(" + join_polys(canonical_) + ")";
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens(I.canonical_generators().begin(), I.canonical_generators().end());
  gens.insert(gens.end(), J.canonical_generators().begin(), J.canonical_generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  for (const auto& a : I.canonical_generators())
    for (const auto& b : J.canonical_generators()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int n) {
  if (n < 0) fail(Errc::invalid_argument, "negative ideal power");
  Ideal acc = I.ring()->unit_ideal();
  for (int i = 0; i < n; ++i) acc = ideal_product(acc, I);
  return acc;
}

namespace {

// Intersection of two lifted ideals in the cover: eliminate t from
// t*A + (1-t)*B in S[t].
std::vector<Polynomial> intersect_lifted(const PolyRingPtr& cover, std::span<const Polynomial> A,
                                         std::span<const Polynomial> B) {
  if (A.empty() || B.empty()) return {};  // either preimage is the zero ideal
  PolyRingPtr ext = cover->extended_front();
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  gens.reserve(A.size() + B.size());
  for (const auto& a : A) gens.push_back(t * a.lifted_front(ext));
  for (const auto& b : B) gens.push_back(one_minus_t * b.lifted_front(ext));
  std::vector<Polynomial> elim = eliminate(gens, 1);
  std::vector<Polynomial> out;
  out.reserve(elim.size());
  for (const auto& p : elim) out.push_back(p.dropped_front(cover));
  return out;
}

// Exact division q = g / f in the cover; g must lie in (f).
Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  const MonomialOrder ord = g.ring()->grevlex();
  Polynomial q = Polynomial::zero(g.ring(), ord);
  Polynomial r = g.with_order(ord);
  Polynomial d = f.with_order(ord);
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    const Term& lf = d.leading();
    if (!lf.mono.divides(lt.mono)) fail(Errc::invalid_argument, "inexact polynomial division");
    Monomial m = lt.mono.quotient(lf.mono);
    Scalar c = lt.coeff / lf.coeff;
    q = q + Polynomial::from_monomial(g.ring(), m, c).with_order(ord);
    r = r - d.times_term(m, c);
  }
  return q;
}

// (P : f) in the cover, P given by a spanning set, f nonzero.
std::vector<Polynomial> colon_lifted(const PolyRingPtr& cover, std::span<const Polynomial> P,
                                     const Polynomial& f) {
  std::vector<Polynomial> meet = intersect_lifted(cover, P, std::vector<Polynomial>{f});
  std::vector<Polynomial> out;
  out.reserve(meet.size());
  for (const auto& g : meet) out.push_back(divide_exact(g, f));
  return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  check_ring(I.ring(), J.ring());
  return Ideal(I.ring(), intersect_lifted(I.ring()->cover(), I.basis().gens, J.basis().gens));
}

Ideal ideal_colon(const Ideal& I, const RingElement& f) {
  check_ring(I.ring(), f.ring());
  if (f.is_zero()) return I.ring()->unit_ideal();  // (I : 0) = R
  if (I.basis().gens.empty())
    return I.ring()->zero_ideal();  // (0 : f) = 0 for f != 0 in a polynomial ring
  return Ideal(I.ring(), colon_lifted(I.ring()->cover(), I.basis().gens, f.rep()));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  check_ring(I.ring(), J.ring());
  Ideal acc = I.ring()->unit_ideal();
  for (const auto& g : J.canonical_generators()) {
    acc = ideal_intersect(acc, ideal_colon(I, I.ring()->element(g)));
    if (acc.is_zero()) break;
  }
  return acc;  // J = (0) gives (I : 0) = R
}

Ideal ideal_scale(const RingElement& w, const Ideal& I) {
  check_ring(w.ring(), I.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.canonical_generators().size());
  for (const auto& g : I.canonical_generators()) gens.push_back(w.rep() * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal principal_ideal(const RingElement& w) { return Ideal(w.ring(), {w.rep()}); }

bool ideal_member(const RingElement& f, const Ideal& I) {
  check_ring(f.ring(), I.ring());
  if (I.basis().gens.empty()) return f.is_zero();
  return normal_form(f.rep(), I.basis()).is_zero();
}

IdealRel ideal_compare(const Ideal& I, const Ideal& J) {
  check_ring(I.ring(), J.ring());
  auto contained = [](const Ideal& A, const Ideal& B) {
    for (const auto& g : A.canonical_generators())
      if (!ideal_member(A.ring()->element(g), B)) return false;
    return true;
  };
  bool ij = contained(I, J), ji = contained(J, I);
  if (ij && ji) return IdealRel::equal;
  if (ij) return IdealRel::subset;
  if (ji) return IdealRel::superset;
  return IdealRel::incomparable;
}

bool radical_member(const RingElement& f, const Ideal& I) {
  check_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  const PolyRingPtr& cover = I.ring()->cover();
  PolyRingPtr ext = cover->extended_front();
  Polynomial t = Polynomial::variable(ext, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis().gens) gens.push_back(g.lifted_front(ext));
  for (const auto& r : I.ring()->relations()) gens.push_back(r.lifted_front(ext));
  gens.push_back(Polynomial::constant(ext, 1) - t * f.rep().lifted_front(ext));
  GroebnerBasis B = reduced_groebner_basis(gens, ext->grevlex());
  return B.contains_one();
}

bool is_regular(const RingElement& w) {
  const RingPtr& ring = w.ring();
  if (w.is_zero()) return false;
  if (ring->relations_trivial()) return true;  // polynomial ring: domain
  std::vector<Polynomial> colon =
      colon_lifted(ring->cover(), ring->relations(), w.rep());
  GroebnerBasis B = reduced_groebner_basis(colon, ring->cover()->grevlex());
  const GroebnerBasis& J = ring->relation_basis();
  if (B.gens.size() != J.gens.size()) return false;
  for (size_t i = 0; i < B.gens.size(); ++i)
    if (!(B.gens[i] == J.gens[i])) return false;
  return true;
}

int compare_canonical(const Ideal& a, const Ideal& b) {
  auto ga = a.basis().gens, gb = b.basis().gens;
  size_t n = std::min(ga.size(), gb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = polynomial_cmp(ga[i], gb[i]);
    if (c != 0) return c;
  }
  if (ga.size() != gb.size()) return ga.size() < gb.size() ? -1 : 1;
  return 0;
}

}  // namespace opal
