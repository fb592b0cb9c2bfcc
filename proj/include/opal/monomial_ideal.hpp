#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opal/monomial.hpp"
#include "opal/polynomial.hpp"

namespace opal {

// Monomial ideal by its unique minimal generating set: an antichain under
// divisibility, canonically sorted. The zero ideal is the empty list; the
// unit ideal is generated by 1.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  MonomialIdeal(int nvars, std::vector<Monomial> gens);  // minimalizes

  int nvars() const { return nvars_; }
  std::span<const Monomial> generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;  // some generator divides m

  bool operator==(const MonomialIdeal&) const = default;

  std::string to_string(std::span<const std::string> names) const;
  std::vector<Polynomial> to_polynomials(const PolyRingPtr& ring) const;

private:
  int nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimal_generators(int nvars, std::vector<Monomial> gens);
MonomialIdeal monomial_ideal_of(std::span<const Polynomial> polys);  // each must be a single term

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_power(const MonomialIdeal& a, int k);

// Squarefree parts of the minimal generators, re-minimalized.
MonomialIdeal monomial_radical(const MonomialIdeal& I);

// A monomial ideal is prime iff generated by a subset of the variables, and
// primary iff every variable occurring in a generator occurs as a pure power.
bool monomial_is_prime(const MonomialIdeal& I);
bool monomial_is_primary(const MonomialIdeal& I);

// Irredundant primary decomposition by recursive generator splitting.
// Components are primary monomial ideals paired with their radical primes;
// components sharing a radical are merged, redundant ones dropped.
std::vector<std::pair<MonomialIdeal, MonomialIdeal>> monomial_primary_components(const MonomialIdeal& I);

// Integral closure via the Newton polyhedron: m is in the closure iff its
// exponent vector lies in conv(generator exponents) + R_{>=0}^n, decided by
// exact rational Fourier-Motzkin feasibility.
MonomialIdeal monomial_integral_closure(const MonomialIdeal& I);
bool newton_member(const Monomial& m, const MonomialIdeal& I);

}  // namespace opal
