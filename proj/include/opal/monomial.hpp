#pragma once

#include <span>
#include <string>
#include <vector>

#include "opal/error.hpp"

namespace opal {

// Dense exponent vector of fixed length n (the ambient variable count).
class Monomial {
public:
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int i) const { return e_[static_cast<size_t>(i)]; }
  int operator[](int i) const { return exponent(i); }
  int degree() const;

  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& m) const;        // this | m
  Monomial quotient(const Monomial& d) const;   // this / d; requires d | this
  Monomial pow(int k) const;
  Monomial squarefree() const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // x_i^a with a >= 1; reports i through var when given. 1 is not a pure power.
  bool is_pure_power(int* var = nullptr) const;

  bool operator==(const Monomial&) const = default;

  std::string to_string(std::span<const std::string> names) const;

private:
  std::vector<int> e_;
};

// Total, multiplicative well-orders on monomials: lex, grevlex, and the
// elimination block order (first k variables beat the rest, grevlex within
// each block). An optional permutation reorders variable significance.
class MonomialOrder {
public:
  enum class Tag { lex, grevlex, block };

  static MonomialOrder lex(int nvars) { return MonomialOrder(Tag::lex, 0, nvars); }
  static MonomialOrder grevlex(int nvars) { return MonomialOrder(Tag::grevlex, 0, nvars); }
  static MonomialOrder block(int k, int nvars);

  MonomialOrder with_permutation(std::vector<int> perm) const;

  Tag tag() const { return tag_; }
  int nvars() const { return nvars_; }
  int block_size() const { return block_; }

  // +1 if a > b, -1 if a < b, 0 if equal.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

  std::string to_string() const;

private:
  MonomialOrder(Tag t, int k, int n) : tag_(t), block_(k), nvars_(n) {}

  int at(const Monomial& m, int i) const {
    return perm_.empty() ? m[i] : m[perm_[static_cast<size_t>(i)]];
  }
  int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const;

  Tag tag_;
  int block_;
  int nvars_;
  std::vector<int> perm_;  // empty = identity; perm_[i] = variable at significance slot i
};

}  // namespace opal
