#pragma once

#include <span>
#include <vector>

#include "opal/polynomial.hpp"

namespace opal {

// Reduced Groebner basis: monic generators, fully inter-reduced, sorted
// ascending by leading monomial. Canonical per (ideal, order); the zero
// ideal is the empty generator list.
struct GroebnerBasis {
  std::vector<Polynomial> gens;
  MonomialOrder ord;
  bool reduced = true;

  bool is_zero_ideal() const { return gens.empty(); }
  bool contains_one() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
  std::string to_string() const;
};

struct BuchbergerStats {
  long pairs_considered = 0;
  long pairs_reduced = 0;
  long basis_size = 0;
};

// Unique remainder of multivariate division of f by G. No remainder term is
// divisible by any leading monomial of G; zero iff f lies in the ideal.
// The order of f must match G's (incompatible-order otherwise).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(Polynomial f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

// Buchberger with the coprimality and chain criteria, normal selection
// strategy, deterministic output. Zero input generators are discarded.
GroebnerBasis reduced_groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                     BuchbergerStats* stats = nullptr, long pair_budget = 500000);

// Generators of <gens> ∩ k[x_{k+1},..,x_n]: basis elements free of the first
// k variables under the elimination block order.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int k);

}  // namespace opal
