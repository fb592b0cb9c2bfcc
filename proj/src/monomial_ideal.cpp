#include "opal/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace opal {

namespace {

// canonical generator order: grevlex descending reads naturally (x before y)
bool canonical_mono_less(const Monomial& a, const Monomial& b) {
  return MonomialOrder::grevlex(a.nvars()).greater(a, b);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return canonical_mono_less(a, b);
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_mono_less);
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& m : gens)
    if (m.nvars() != nvars) fail(Errc::incompatible_ring, "monomial variable count mismatch");
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

std::string MonomialIdeal::to_string(std::span<const std::string> names) const {
  std::ostringstream os;
  os << "(";
  if (gens_.empty()) os << "0";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string(names);
  }
  os << ")";
  return os.str();
}

std::vector<Polynomial> MonomialIdeal::to_polynomials(const PolyRingPtr& ring) const {
  if (ring->nvars() != nvars_) fail(Errc::incompatible_ring, "ring variable count mismatch");
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& m : gens_) out.push_back(Polynomial::from_monomial(ring, m, ring->field().one()));
  return out;
}

MonomialIdeal minimal_generators(int nvars, std::vector<Monomial> gens) {
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal monomial_ideal_of(std::span<const Polynomial> polys) {
  if (polys.empty()) fail(Errc::invalid_argument, "empty polynomial list");
  int n = polys[0].ring()->nvars();
  std::vector<Monomial> gens;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!p.is_single_term()) fail(Errc::invalid_argument, "polynomial is not a monomial: " + p.to_string());
    gens.push_back(p.terms()[0].mono);
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal monomial_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(Monomial::lcm(x, y));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal monomial_power(const MonomialIdeal& a, int k) {
  if (k < 0) fail(Errc::invalid_argument, "negative ideal power");
  MonomialIdeal acc(a.nvars(), {Monomial(a.nvars())});  // unit ideal
  for (int i = 0; i < k; ++i) acc = monomial_product(acc, a);
  return acc;
}

MonomialIdeal monomial_radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& m : I.generators()) gens.push_back(m.squarefree());
  return MonomialIdeal(I.nvars(), std::move(gens));
}

bool monomial_is_prime(const MonomialIdeal& I) {
  for (const auto& m : I.generators()) {
    int var;
    if (!m.is_pure_power(&var) || m.degree() != 1) return false;
  }
  return true;  // zero ideal counts: prime in a polynomial ring
}

bool monomial_is_primary(const MonomialIdeal& I) {
  if (I.is_zero()) return true;
  std::vector<bool> occurs(static_cast<size_t>(I.nvars()), false);
  std::vector<bool> pure(static_cast<size_t>(I.nvars()), false);
  for (const auto& m : I.generators()) {
    int var;
    if (m.is_pure_power(&var)) pure[static_cast<size_t>(var)] = true;
    for (int v = 0; v < I.nvars(); ++v)
      if (m[v] > 0) occurs[static_cast<size_t>(v)] = true;
  }
  for (int v = 0; v < I.nvars(); ++v)
    if (occurs[static_cast<size_t>(v)] && !pure[static_cast<size_t>(v)]) return false;
  return true;
}

namespace {

void split_components(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
  if (monomial_is_primary(I)) {
    out.push_back(I);
    return;
  }
  // pick the first generator that is neither 1 nor a pure power and split it
  // into coprime factors m = x_v^e * rest
  for (const auto& m : I.generators()) {
    int nz = 0, first_var = -1;
    for (int v = 0; v < I.nvars(); ++v)
      if (m[v] > 0) {
        ++nz;
        if (first_var < 0) first_var = v;
      }
    if (nz < 2) continue;
    std::vector<int> e1(static_cast<size_t>(I.nvars()), 0), e2(static_cast<size_t>(I.nvars()), 0);
    for (int v = 0; v < I.nvars(); ++v)
      (v == first_var ? e1 : e2)[static_cast<size_t>(v)] = m[v];
    Monomial m1{std::move(e1)}, m2{std::move(e2)};
    std::vector<Monomial> g1(I.generators().begin(), I.generators().end());
    std::vector<Monomial> g2 = g1;
    g1.push_back(m1);
    g2.push_back(m2);
    split_components(MonomialIdeal(I.nvars(), std::move(g1)), out);
    split_components(MonomialIdeal(I.nvars(), std::move(g2)), out);
    return;
  }
  fail(Errc::invalid_argument, "splitting step found no mixed generator");
}

}  // namespace

std::vector<std::pair<MonomialIdeal, MonomialIdeal>> monomial_primary_components(const MonomialIdeal& I) {
  if (I.is_unit()) fail(Errc::invalid_argument, "the unit ideal has no primary decomposition");

  std::vector<MonomialIdeal> raw;
  split_components(I, raw);

  // dedupe, then merge components with equal radicals
  std::sort(raw.begin(), raw.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    auto ga = a.generators(), gb = b.generators();
    return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end(),
                                        canonical_mono_less);
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> merged;  // (primary, radical)
  for (const auto& q : raw) {
    MonomialIdeal rad = monomial_radical(q);
    bool found = false;
    for (auto& [mq, mr] : merged)
      if (mr == rad) {
        mq = monomial_intersect(mq, q);
        found = true;
        break;
      }
    if (!found) merged.emplace_back(q, rad);
  }

  // drop components containing the intersection of the others, until stable
  bool changed = true;
  while (changed && merged.size() > 1) {
    changed = false;
    for (size_t i = 0; i < merged.size(); ++i) {
      MonomialIdeal rest(I.nvars(), {Monomial(I.nvars())});  // unit
      for (size_t j = 0; j < merged.size(); ++j)
        if (j != i) rest = monomial_intersect(rest, merged[j].first);
      bool contains_rest = true;
      for (const auto& g : rest.generators())
        if (!merged[i].first.contains(g)) {
          contains_rest = false;
          break;
        }
      if (contains_rest) {
        merged.erase(merged.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }

  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    auto ga = a.second.generators(), gb = b.second.generators();
    if (ga.size() != gb.size()) return ga.size() < gb.size();
    if (std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end(), canonical_mono_less))
      return true;
    if (std::lexicographical_compare(gb.begin(), gb.end(), ga.begin(), ga.end(), canonical_mono_less))
      return false;
    auto qa = a.first.generators(), qb = b.first.generators();
    return std::lexicographical_compare(qa.begin(), qa.end(), qb.begin(), qb.end(), canonical_mono_less);
  });
  return merged;
}

// ---------------------------------------------------------------------------
// Newton polyhedron membership

namespace {

// One inequality sum_i a[i] * lambda_i <= b.
struct FMRow {
  std::vector<mpq_class> a;
  mpq_class b;
};

void normalize_row(FMRow& r) {
  mpq_class biggest = 0;
  for (const auto& c : r.a) {
    mpq_class m = abs(c);
    if (m > biggest) biggest = m;
  }
  if (biggest == 0) {
    mpq_class m = abs(r.b);
    if (m > 0) {
      r.b /= m;
    }
    return;
  }
  for (auto& c : r.a) c /= biggest;
  r.b /= biggest;
}

bool row_less(const FMRow& x, const FMRow& y) {
  if (x.b != y.b) return x.b < y.b;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
  return false;
}

bool row_eq(const FMRow& x, const FMRow& y) { return x.b == y.b && x.a == y.a; }

// Exact Fourier-Motzkin feasibility of {A lambda <= b}.
bool fm_feasible(std::vector<FMRow> rows, size_t nvar) {
  for (size_t v = 0; v < nvar; ++v) {
    std::vector<FMRow> pos, neg, zero;
    for (auto& r : rows) {
      if (r.a[v] > 0)
        pos.push_back(std::move(r));
      else if (r.a[v] < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    std::vector<FMRow> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // combine p/|p_v| + n/|n_v| to cancel lambda_v
        FMRow r;
        r.a.resize(p.a.size());
        mpq_class cp = p.a[v], cn = -n.a[v];
        for (size_t i = 0; i < p.a.size(); ++i) r.a[i] = p.a[i] / cp + n.a[i] / cn;
        r.b = p.b / cp + n.b / cn;
        r.a[v] = 0;
        normalize_row(r);
        next.push_back(std::move(r));
      }
    std::sort(next.begin(), next.end(), row_less);
    next.erase(std::unique(next.begin(), next.end(), row_eq), next.end());
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.b < 0) return false;  // 0 <= b violated
  return true;
}

}  // namespace

bool newton_member(const Monomial& m, const MonomialIdeal& I) {
  if (I.is_zero()) return false;
  if (I.contains(m)) return true;
  auto gens = I.generators();
  size_t k = gens.size();
  int n = I.nvars();

  // lambda >= 0, sum lambda = 1, sum lambda_i e_i[j] <= m[j]
  std::vector<FMRow> rows;
  for (size_t i = 0; i < k; ++i) {
    FMRow r;
    r.a.assign(k, 0);
    r.a[i] = -1;
    r.b = 0;
    rows.push_back(std::move(r));
  }
  FMRow sum_le, sum_ge;
  sum_le.a.assign(k, 1);
  sum_le.b = 1;
  sum_ge.a.assign(k, -1);
  sum_ge.b = -1;
  rows.push_back(std::move(sum_le));
  rows.push_back(std::move(sum_ge));
  for (int j = 0; j < n; ++j) {
    FMRow r;
    r.a.resize(k);
    for (size_t i = 0; i < k; ++i) r.a[i] = gens[i][j];
    r.b = m[j];
    rows.push_back(std::move(r));
  }
  return fm_feasible(std::move(rows), k);
}

MonomialIdeal monomial_integral_closure(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return I;
  int n = I.nvars();
  // Minimal generators of the closure lie inside the componentwise maximum
  // box of the generator exponents.
  std::vector<int> box(static_cast<size_t>(n), 0);
  for (const auto& g : I.generators())
    for (int v = 0; v < n; ++v) box[static_cast<size_t>(v)] = std::max(box[static_cast<size_t>(v)], g[v]);

  std::vector<Monomial> members;
  std::vector<int> e(static_cast<size_t>(n), 0);
  for (;;) {
    Monomial m{std::vector<int>(e)};
    if (newton_member(m, I)) members.push_back(std::move(m));
    int v = n - 1;
    while (v >= 0 && e[static_cast<size_t>(v)] == box[static_cast<size_t>(v)]) {
      e[static_cast<size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
    ++e[static_cast<size_t>(v)];
  }
  return MonomialIdeal(n, std::move(members));
}

}  // namespace opal
