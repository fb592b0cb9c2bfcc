#pragma once

#include <gmpxx.h>

#include <string>

#include "opal/error.hpp"

namespace opal {

class Scalar;

// Coefficient field: QQ with exact rational arithmetic, or GF(p) for a
// prime p < 2^31. The two kinds never mix inside one ring.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field gf(long p);

  bool is_rationals() const { return p_ == 0; }
  long modulus() const { return p_; }  // 0 for QQ
  bool operator==(const Field&) const = default;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_long(long v) const;
  Scalar from_integer(const mpz_class& v) const;

  std::string to_string() const;  // "QQ" or "GF(p)"

private:
  explicit Field(long p) : p_(p) {}
  long p_ = 0;
};

bool is_prime(long p);

// Exact field element: a reduced rational with positive denominator, or a
// residue in [0, p). Self-describing so arithmetic needs no field context.
class Scalar {
public:
  Scalar() = default;  // rational zero

  static Scalar rational(mpq_class v);
  static Scalar rational(long num, long den = 1);
  static Scalar residue(long v, long p);

  long modulus() const { return p_; }
  bool same_kind(const Scalar& o) const { return p_ == o.p_; }

  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;  // e >= 0

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Deterministic total order within one kind, for canonical sorting.
  static int cmp(const Scalar& a, const Scalar& b);

  const mpq_class& rat() const { return q_; }
  long res() const { return r_; }

  std::string to_string() const;

private:
  void check_kind(const Scalar& o) const {
    if (p_ != o.p_) fail(Errc::incompatible_ring, "mixed scalar kinds");
  }

  mpq_class q_;  // payload when p_ == 0
  long r_ = 0;   // payload when p_ != 0
  long p_ = 0;
};

}  // namespace opal
