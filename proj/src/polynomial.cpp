#include "opal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace opal {

PolyRingPtr PolyRing::make(Field k, std::vector<std::string> vars) {
  if (vars.empty()) fail(Errc::invalid_argument, "a polynomial ring needs at least one variable");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) fail(Errc::invalid_argument, "duplicate variable name " + vars[i]);
  return PolyRingPtr(new PolyRing(k, std::move(vars)));
}

int PolyRing::var_index(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

PolyRingPtr PolyRing::extended_front(const std::string& base_name) const {
  std::string name = base_name;
  while (var_index(name) >= 0) name += "'";
  std::vector<std::string> vars;
  vars.reserve(vars_.size() + 1);
  vars.push_back(name);
  vars.insert(vars.end(), vars_.begin(), vars_.end());
  return make(field_, std::move(vars));
}

std::string PolyRing::to_string() const {
  std::ostringstream os;
  os << field_.to_string() << "[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) os << ",";
    os << vars_[i];
  }
  os << "]";
  return os.str();
}

bool same_ring(const PolyRing& a, const PolyRing& b) {
  if (&a == &b) return true;
  if (!(a.field() == b.field())) return false;
  auto av = a.var_names(), bv = b.var_names();
  return std::equal(av.begin(), av.end(), bv.begin(), bv.end());
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) { return same_ring(*a, *b); }

Polynomial Polynomial::zero(PolyRingPtr ring, MonomialOrder ord) {
  return Polynomial(std::move(ring), std::move(ord));
}

Polynomial Polynomial::zero(PolyRingPtr ring) {
  MonomialOrder ord = ring->grevlex();
  return Polynomial(std::move(ring), ord);
}

Polynomial Polynomial::constant(PolyRingPtr ring, Scalar c) {
  Monomial one(ring->nvars());
  return from_monomial(std::move(ring), one, std::move(c));
}

Polynomial Polynomial::constant(PolyRingPtr ring, long c) {
  Scalar s = ring->field().from_long(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(PolyRingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) fail(Errc::invalid_argument, "variable index out of range");
  std::vector<int> e(static_cast<size_t>(ring->nvars()), 0);
  e[static_cast<size_t>(index)] = 1;
  Scalar one = ring->field().one();
  return from_monomial(std::move(ring), Monomial(std::move(e)), one);
}

Polynomial Polynomial::from_monomial(PolyRingPtr ring, Monomial m, Scalar c) {
  if (!c.is_zero() && c.modulus() != ring->field().modulus())
    fail(Errc::incompatible_ring, "scalar kind does not match the ring's field");
  Polynomial p(std::move(ring), MonomialOrder::grevlex(m.nvars()));
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, MonomialOrder ord, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.nvars() != ring->nvars()) fail(Errc::incompatible_ring, "term variable count mismatch");
    if (!t.coeff.is_zero() && t.coeff.modulus() != ring->field().modulus())
      fail(Errc::incompatible_ring, "term scalar kind mismatch");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Polynomial p(std::move(ring), ord);
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      Scalar merged = p.terms_.back().coeff + t.coeff;
      if (merged.is_zero())
        p.terms_.pop_back();
      else
        p.terms_.back().coeff = merged;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "the zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "the zero polynomial has no tail");
  Polynomial p(ring_, ord_);
  p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::with_order(const MonomialOrder& ord) const {
  if (ord == ord_) return *this;
  if (ord.nvars() != ring_->nvars()) fail(Errc::incompatible_order, "order variable count mismatch");
  std::vector<Term> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Polynomial p(ring_, ord);
  p.terms_ = std::move(ts);
  return p;
}

namespace {
void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) fail(Errc::incompatible_ring, "polynomials from different rings");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(*this, o);
  const Polynomial& rhs = o.order() == ord_ ? o : o.with_order(ord_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = ord_.cmp(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  Polynomial p(ring_, ord_);
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_, ord_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, -t.coeff});
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_, ord_);
  Polynomial p(ring_, ord_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const { return times_term(Monomial(ring_->nvars()), c); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(*this, o);
  const Polynomial& rhs = o.order() == ord_ ? o : o.with_order(ord_);
  auto greater = [this](const Monomial& a, const Monomial& b) { return ord_.greater(a, b); };
  std::map<Monomial, Scalar, decltype(greater)> acc(greater);
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) {
      Monomial m = a.mono * b.mono;
      Scalar c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  Polynomial p(ring_, ord_);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) fail(Errc::invalid_argument, "negative polynomial power");
  Polynomial acc = constant(ring_, ring_->field().one()).with_order(ord_);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  const Term& lt = leading();
  if (lt.coeff.is_one()) return *this;
  return scaled(lt.coeff.inverse());
}

bool Polynomial::depends_on(int var) const {
  for (const auto& t : terms_)
    if (t.mono[var] > 0) return true;
  return false;
}

Polynomial Polynomial::lifted_front(const PolyRingPtr& bigger) const {
  if (bigger->nvars() != ring_->nvars() + 1) fail(Errc::incompatible_ring, "not a front extension");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(static_cast<size_t>(bigger->nvars()), 0);
    for (int i = 0; i < ring_->nvars(); ++i) e[static_cast<size_t>(i + 1)] = t.mono[i];
    ts.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return from_terms(bigger, bigger->grevlex(), std::move(ts));
}

Polynomial Polynomial::dropped_front(const PolyRingPtr& smaller) const {
  if (smaller->nvars() != ring_->nvars() - 1) fail(Errc::incompatible_ring, "not a front contraction");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[0] != 0) fail(Errc::invalid_argument, "polynomial still depends on the tag variable");
    std::vector<int> e(static_cast<size_t>(smaller->nvars()), 0);
    for (int i = 0; i < smaller->nvars(); ++i) e[static_cast<size_t>(i)] = t.mono[i + 1];
    ts.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return from_terms(smaller, smaller->grevlex(), std::move(ts));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  const Polynomial& rhs = o.order() == ord_ ? o : o.with_order(ord_);
  if (terms_.size() != rhs.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == rhs.terms_[i].mono && terms_[i].coeff == rhs.terms_[i].coeff)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  auto names = ring_->var_names();
  bool rational = ring_->field().is_rationals();
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Scalar c = t.coeff;
    bool neg = rational && c.rat() < 0;
    if (i == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    if (t.mono.is_one()) {
      os << c.to_string();
    } else if (c.is_one()) {
      os << t.mono.to_string(names);
    } else {
      os << c.to_string() << "*" << t.mono.to_string(names);
    }
  }
  return os.str();
}

Term leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "the zero polynomial has no leading term");
  if (ord == f.order()) return f.terms()[0];
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms())
    if (ord.greater(t.mono, best->mono)) best = &t;
  return *best;
}

int polynomial_cmp(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder ord = a.ring()->grevlex();
  Polynomial pa = a.with_order(ord), pb = b.with_order(ord);
  auto ta = pa.terms(), tb = pb.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ord.cmp(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    c = Scalar::cmp(ta[i].coeff, tb[i].coeff);
    if (c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct PolyLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::parse_error, what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error("expected integer");
    return mpz_class(std::string(text.substr(start, pos - start)));
  }
  long small_nat(const char* what) {
    mpz_class v = integer();
    if (!v.fits_slong_p()) error(std::string("oversized ") + what);
    return v.get_si();
  }
};

struct PolyParser {
  const PolyRingPtr& ring;
  PolyLexer lx;

  Polynomial parse_expr() {
    bool neg = false;
    if (lx.accept('-'))
      neg = true;
    else
      lx.accept('+');
    Polynomial acc = parse_product();
    if (neg) acc = -acc;
    for (;;) {
      char c = lx.peek();
      if (c == '+') {
        ++lx.pos;
        acc = acc + parse_product();
      } else if (c == '-') {
        ++lx.pos;
        acc = acc - parse_product();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_power();
    while (lx.accept('*')) acc = acc * parse_power();
    return acc;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (lx.accept('^')) {
      long e = lx.small_nat("exponent");
      if (e > 4096) lx.error("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial parse_atom() {
    char c = lx.peek();
    if (c == '(') {
      ++lx.pos;
      Polynomial inner = parse_expr();
      if (!lx.accept(')')) lx.error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = lx.integer();
      if (lx.peek() == '/') {
        ++lx.pos;
        mpz_class den = lx.integer();
        if (den == 0) lx.error("zero denominator");
        if (ring->field().is_rationals()) return Polynomial::constant(ring, Scalar::rational(mpq_class(num, den)));
        Scalar d = ring->field().from_integer(den);
        return Polynomial::constant(ring, ring->field().from_integer(num) * d.inverse());
      }
      return Polynomial::constant(ring, ring->field().from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      if (c == '@') ++lx.pos;  // internal tag names
      std::string name = (c == '@' ? "@" : "") + lx.ident();
      int idx = ring->var_index(name);
      if (idx < 0) lx.error("unknown variable '" + name + "'");
      return Polynomial::variable(ring, idx);
    }
    lx.error("expected a term");
  }
};

}  // namespace

Polynomial Polynomial::parse(const PolyRingPtr& ring, std::string_view text) {
  PolyParser p{ring, PolyLexer{text}};
  if (p.lx.eof()) fail(Errc::parse_error, "empty polynomial text");
  Polynomial result = p.parse_expr();
  if (!p.lx.eof()) p.lx.error("unexpected trailing input");
  return result;
}

}  // namespace opal
