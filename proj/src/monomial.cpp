#include "opal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace opal {

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (nvars() != o.nvars()) fail(Errc::incompatible_ring, "monomial variable counts differ");
  std::vector<int> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  if (nvars() != m.nvars()) fail(Errc::incompatible_ring, "monomial variable counts differ");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
  if (!d.divides(*this)) fail(Errc::invalid_argument, "monomial quotient is not exact");
  std::vector<int> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] -= d.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) fail(Errc::invalid_argument, "negative monomial power");
  std::vector<int> e(e_);
  for (auto& x : e) x *= k;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree() const {
  std::vector<int> e(e_);
  for (auto& x : e) x = x > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) fail(Errc::incompatible_ring, "monomial variable counts differ");
  std::vector<int> e(a.e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) fail(Errc::incompatible_ring, "monomial variable counts differ");
  std::vector<int> e(a.e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::is_pure_power(int* var) const {
  int found = -1;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) {
      if (found >= 0) return false;
      found = static_cast<int>(i);
    }
  }
  if (found < 0) return false;
  if (var) *var = found;
  return true;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << names[i];
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

MonomialOrder MonomialOrder::block(int k, int nvars) {
  if (k <= 0 || k >= nvars) fail(Errc::invalid_elimination, "block size must satisfy 0 < k < nvars");
  return MonomialOrder(Tag::block, k, nvars);
}

MonomialOrder MonomialOrder::with_permutation(std::vector<int> perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    fail(Errc::invalid_argument, "permutation length must equal variable count");
  MonomialOrder o(*this);
  o.perm_ = std::move(perm);
  return o;
}

int MonomialOrder::cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += at(a, i);
    db += at(b, i);
  }
  if (da != db) return da > db ? 1 : -1;
  // equal degree: last nonzero difference negative means greater
  for (int i = hi - 1; i >= lo; --i) {
    int d = at(a, i) - at(b, i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_)
    fail(Errc::incompatible_order, "monomial does not match order's variable count");
  switch (tag_) {
    case Tag::lex:
      for (int i = 0; i < nvars_; ++i) {
        int d = at(a, i) - at(b, i);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    case Tag::grevlex:
      return cmp_grevlex_range(a, b, 0, nvars_);
    case Tag::block: {
      int r = cmp_grevlex_range(a, b, 0, block_);
      if (r != 0) return r;
      return cmp_grevlex_range(a, b, block_, nvars_);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (tag_) {
    case Tag::lex: return "lex";
    case Tag::grevlex: return "grevlex";
    case Tag::block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace opal
