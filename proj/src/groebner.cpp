#include "opal/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace opal {

std::string GroebnerBasis::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].to_string();
  }
  os << "}";
  return os.str();
}

Polynomial normal_form(Polynomial f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  if (!(f.order() == ord)) fail(Errc::incompatible_order, "polynomial order does not match basis order");
  for (const auto& g : divisors)
    if (!(g.order() == ord)) fail(Errc::incompatible_order, "divisor order does not match basis order");

  std::vector<Term> remainder;
  Polynomial p = std::move(f);
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const Polynomial* reducer = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading().mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      const Term& glt = reducer->leading();
      Monomial m = lt.mono.quotient(glt.mono);
      Scalar c = lt.coeff / glt.coeff;
      p = p - reducer->times_term(m, c);
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(p.ring(), ord, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f.order() == G.ord ? f : f.with_order(G.ord), G.gens, G.ord);
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& ltf = f.leading();
  const Term& ltg = g.leading();
  Monomial l = Monomial::lcm(ltf.mono, ltg.mono);
  Polynomial a = f.times_term(l.quotient(ltf.mono), ltf.coeff.inverse());
  Polynomial b = g.times_term(l.quotient(ltg.mono), ltg.coeff.inverse());
  return a - b;
}

struct Pair {
  int i, j;
  Monomial lcm;
};

// Inter-reduce a generating set that is already a Groebner basis into the
// reduced basis: minimal leading monomials, monic, tails reduced.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gens, const MonomialOrder& ord) {
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  for (auto& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.less(a.leading().mono, b.leading().mono); });

  // minimalize leading monomials
  std::vector<Polynomial> minimal;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& kept : minimal)
      if (kept.leading().mono.divides(g.leading().mono)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }

  // tail reduction to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others, ord);
      if (!(r == minimal[i])) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = r.monic();
        }
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.less(a.leading().mono, b.leading().mono); });
  return minimal;
}

}  // namespace

GroebnerBasis reduced_groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                     BuchbergerStats* stats, long pair_budget) {
  if (gens.empty()) fail(Errc::invalid_argument, "empty generator list");
  const PolyRingPtr ring = gens[0].ring();
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) fail(Errc::incompatible_ring, "generators from different rings");

  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    Polynomial h = g.with_order(ord);
    if (!h.is_zero()) basis.push_back(h.monic());
  }
  // deterministic starting point regardless of generator order
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return polynomial_cmp(a, b) < 0;
  });
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              basis.end());

  GroebnerBasis result{{}, ord, true};
  if (basis.empty()) return result;  // zero ideal

  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;  // normal strategy: smallest lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<int, int>> pending;

  auto push_pair = [&](int i, int j) {
    queue.insert(Pair{i, j, Monomial::lcm(basis[static_cast<size_t>(i)].leading().mono,
                                          basis[static_cast<size_t>(j)].leading().mono)});
    pending.insert({i, j});
  };

  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  long considered = 0, reduced_count = 0;
  while (!queue.empty()) {
    if (++considered > pair_budget)
      fail(Errc::budget_exceeded, "Buchberger pair budget exceeded (" + std::to_string(pair_budget) + ")");
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});

    const Polynomial& f = basis[static_cast<size_t>(pr.i)];
    const Polynomial& g = basis[static_cast<size_t>(pr.j)];

    // criterion 1: coprime leading monomials
    if (Monomial::gcd(f.leading().mono, g.leading().mono).is_one()) continue;

    // chain criterion: some h divides the lcm and both companion pairs are done
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      int ki = static_cast<int>(k);
      if (ki == pr.i || ki == pr.j) continue;
      if (!basis[k].leading().mono.divides(pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, ki);
      auto key_jk = std::minmax(pr.j, ki);
      if (!pending.count({key_ik.first, key_ik.second}) && !pending.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(f, g);
    Polynomial r = normal_form(s, basis, ord);
    ++reduced_count;
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      int newest = static_cast<int>(basis.size()) - 1;
      for (int i = 0; i < newest; ++i) push_pair(i, newest);
    }
  }

  result.gens = reduce_basis(std::move(basis), ord);
  if (stats) {
    stats->pairs_considered = considered;
    stats->pairs_reduced = reduced_count;
    stats->basis_size = static_cast<long>(result.gens.size());
  }
  return result;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int k) {
  if (gens.empty()) fail(Errc::invalid_argument, "empty generator list");
  int n = gens[0].ring()->nvars();
  if (k >= n) fail(Errc::invalid_elimination, "cannot eliminate all variables");
  if (k <= 0) fail(Errc::invalid_elimination, "nothing to eliminate");
  MonomialOrder ord = MonomialOrder::block(k, n);
  GroebnerBasis G = reduced_groebner_basis(gens, ord);
  std::vector<Polynomial> kept;
  for (const auto& g : G.gens) {
    bool free_of_block = true;
    for (int v = 0; v < k && free_of_block; ++v)
      if (g.depends_on(v)) free_of_block = false;
    if (free_of_block) kept.push_back(g);
  }
  return kept;
}

}  // namespace opal
