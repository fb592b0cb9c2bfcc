#include "opal/scalar.hpp"

#include <sstream>

namespace opal {

bool is_prime(long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Field Field::gf(long p) {
  if (p < 2 || p >= (1L << 31)) fail(Errc::invalid_argument, "GF modulus must satisfy 2 <= p < 2^31");
  if (!is_prime(p)) fail(Errc::invalid_argument, "GF modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::zero() const { return from_long(0); }
Scalar Field::one() const { return from_long(1); }

Scalar Field::from_long(long v) const {
  return p_ == 0 ? Scalar::rational(v) : Scalar::residue(v, p_);
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (p_ == 0) return Scalar::rational(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Scalar::residue(r.get_si(), p_);
}

std::string Field::to_string() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  Scalar s;
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(Errc::invalid_argument, "zero denominator");
  return rational(mpq_class(num, den));
}

Scalar Scalar::residue(long v, long p) {
  if (p < 2) fail(Errc::invalid_argument, "residue modulus must be >= 2");
  Scalar s;
  s.p_ = p;
  s.r_ = v % p;
  if (s.r_ < 0) s.r_ += p;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_kind(o);
  if (p_ == 0) return rational(q_ + o.q_);
  return residue(r_ + o.r_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_kind(o);
  if (p_ == 0) return rational(q_ - o.q_);
  return residue(r_ - o.r_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_kind(o);
  if (p_ == 0) return rational(q_ * o.q_);
  return residue((r_ * o.r_) % p_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_ == 0) return rational(-q_);
  return residue(-r_, p_);
}

namespace {
// extended Euclid; p prime, 0 < a < p
long mod_inverse(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}
}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::invalid_argument, "division by zero scalar");
  if (p_ == 0) return rational(1 / q_);
  return residue(mod_inverse(r_, p_), p_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) fail(Errc::invalid_argument, "negative scalar power");
  Scalar acc = p_ == 0 ? rational(1) : residue(1, p_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  a.check_kind(b);
  if (a.p_ == 0) return ::cmp(a.q_, b.q_);
  return a.r_ < b.r_ ? -1 : a.r_ > b.r_ ? 1 : 0;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  std::ostringstream os;
  os << q_;
  return os.str();
}

}  // namespace opal
