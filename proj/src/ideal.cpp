#include "lcmlat/ideal.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "lcmlat/error.hpp"

namespace lcmlat {

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return out;
}

MonomialIdeal minimalize(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "an ideal needs at least one generator");
  const auto nvars = monomials.front().nvars();
  for (const auto& m : monomials) {
    if (m.nvars() != nvars) throw Error(ErrorCode::BadParameter, "monomials live in different polynomial rings");
    if (m.is_one()) throw Error(ErrorCode::UnitGenerator, "the unit monomial generates the whole ring");
  }
  MonomialIdeal I;
  I.nvars_ = nvars;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const auto& m = monomials[i];
    bool keep = true;
    for (std::size_t j = 0; j < monomials.size() && keep; ++j) {
      if (i == j || !monomials[j].divides(m)) continue;
      // Strict divisor, or an equal monomial seen earlier.
      if (monomials[j] != m || j < i) keep = false;
    }
    if (keep) I.gens_.push_back(m);
  }
  return I;
}

FiniteLattice lcm_lattice(const MonomialIdeal& I) {
  const auto& gens = I.generators();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> rest;
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        auto l = lcm(m, g);
        if (seen.insert(l).second) {
          rest.push_back(l);
          next.push_back(std::move(l));
          if (seen.size() + 1 > kMaxLatticeElements)
            throw Error(ErrorCode::TooLarge, "LCM lattice exceeds " + std::to_string(kMaxLatticeElements) + " elements");
        }
      }
    frontier = std::move(next);
  }
  std::sort(rest.begin(), rest.end(), degree_lex_less);

  std::vector<Monomial> labels;
  labels.reserve(1 + gens.size() + rest.size());
  labels.emplace_back(I.nvars());
  labels.insert(labels.end(), gens.begin(), gens.end());
  labels.insert(labels.end(), rest.begin(), rest.end());

  const auto n = labels.size();
  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (labels[x].divides(labels[y])) down[y].set(x);
  return FiniteLattice::from_down_sets(std::move(down), std::move(labels));
}

MonomialIdeal polarize(const MonomialIdeal& I) {
  std::vector<Exponent> maxdeg(I.nvars(), 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < I.nvars(); ++i) maxdeg[i] = std::max(maxdeg[i], g[i]);
  std::vector<std::size_t> offset(I.nvars() + 1, 0);
  for (std::size_t i = 0; i < I.nvars(); ++i) offset[i + 1] = offset[i] + maxdeg[i];
  std::vector<Monomial> out;
  for (const auto& g : I.generators()) {
    Monomial p(offset.back());
    for (std::size_t i = 0; i < I.nvars(); ++i)
      for (Exponent k = 0; k < g[i]; ++k) p[offset[i] + k] = 1;
    out.push_back(std::move(p));
  }
  return minimalize(out);
}

MonomialIdeal phan_ideal(const FiniteLattice& L) {
  if (L.size() == 1) throw Error(ErrorCode::NotAtomic, "the one-point lattice has no atoms");
  auto atomic = is_atomic(L);
  if (!atomic.holds)
    throw Error(ErrorCode::NotAtomic, "element " + std::to_string(atomic.witness.at(0)) + " is not a join of atoms");
  auto mi = meet_irreducibles(L);
  std::vector<Monomial> gens;
  for (auto b : atoms(L)) {
    Monomial g(mi.size());
    for (std::size_t k = 0; k < mi.size(); ++k)
      if (!L.leq(b, mi[k])) g[k] = 1;
    gens.push_back(std::move(g));
  }
  return minimalize(gens);
}

namespace {

class HittingSet {
public:
  explicit HittingSet(const MonomialIdeal& I) : nvars_(I.nvars()) {
    for (const auto& g : I.generators()) {
      BitSet s(nvars_);
      for (auto v : g.support()) s.set(v);
      sets_.push_back(std::move(s));
    }
    best_ = nvars_;
  }

  std::size_t solve() {
    BitSet chosen(nvars_);
    recurse(chosen, 0);
    return best_;
  }

private:
  // Greedy packing of pairwise disjoint unhit generators: each needs its own variable.
  std::size_t lower_bound(const BitSet& chosen) const {
    std::size_t bound = 0;
    BitSet used(nvars_);
    for (const auto& s : sets_) {
      if (s.intersects(chosen) || s.intersects(used)) continue;
      used |= s;
      ++bound;
    }
    return bound;
  }

  void recurse(BitSet& chosen, std::size_t size) {
    if (size + lower_bound(chosen) >= best_) return;
    const BitSet* pick = nullptr;
    for (const auto& s : sets_)
      if (!s.intersects(chosen) && (!pick || s.count() < pick->count())) pick = &s;
    if (!pick) {
      best_ = size;
      return;
    }
    pick->for_each([&](std::size_t v) {
      chosen.set(v);
      recurse(chosen, size + 1);
      chosen.reset(v);
    });
  }

  std::size_t nvars_;
  std::vector<BitSet> sets_;
  std::size_t best_;
};

}  // namespace

std::size_t ideal_height(const MonomialIdeal& I) { return HittingSet(I).solve(); }

MonomialIdeal drop_unused_variables(const MonomialIdeal& I) {
  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < I.nvars(); ++v)
    if (std::any_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) { return g[v] != 0; }))
      used.push_back(v);
  std::vector<Monomial> out;
  for (const auto& g : I.generators()) {
    Monomial m(used.size());
    for (std::size_t k = 0; k < used.size(); ++k) m[k] = g[used[k]];
    out.push_back(std::move(m));
  }
  return minimalize(out);
}

bool is_minimal_ideal(const MonomialIdeal& I) {
  if (!I.is_squarefree()) return false;
  auto L = lcm_lattice(I);
  const auto q = I.size();
  // Atoms of L are elements 1..q, matching generator order.
  std::vector<std::vector<char>> phan_columns;
  for (auto a : meet_irreducibles(L)) {
    std::vector<char> col(q);
    for (std::size_t k = 0; k < q; ++k) col[k] = L.leq(static_cast<Element>(k + 1), a);
    phan_columns.push_back(std::move(col));
  }
  std::vector<std::vector<char>> columns;
  for (std::size_t v = 0; v < I.nvars(); ++v) {
    std::vector<char> col(q);
    bool used = false;
    for (std::size_t k = 0; k < q; ++k) {
      col[k] = I.generators()[k][v] == 0;
      used = used || !col[k];
    }
    if (used) columns.push_back(std::move(col));
  }
  std::sort(phan_columns.begin(), phan_columns.end());
  std::sort(columns.begin(), columns.end());
  return phan_columns == columns;
}

bool equivalent_up_to_variable_permutation(const MonomialIdeal& I, const MonomialIdeal& J) {
  auto a = drop_unused_variables(I);
  auto b = drop_unused_variables(J);
  const auto n = a.nvars();
  if (n != b.nvars() || a.size() != b.size()) return false;

  auto column = [](const MonomialIdeal& K, std::size_t v) {
    std::vector<Exponent> c;
    for (const auto& g : K.generators()) c.push_back(g[v]);
    std::sort(c.begin(), c.end());
    return c;
  };
  std::vector<std::vector<Exponent>> ca(n), cb(n);
  for (std::size_t v = 0; v < n; ++v) {
    ca[v] = column(a, v);
    cb[v] = column(b, v);
  }

  std::vector<std::size_t> sigma(n);
  std::vector<char> taken(n, 0);
  // Generators of a and b projected onto the assigned variables must agree as multisets.
  auto prefix_consistent = [&](std::size_t k) {
    std::vector<std::vector<Exponent>> pa, pb;
    for (std::size_t g = 0; g < a.size(); ++g) {
      std::vector<Exponent> ra(k), rb(k);
      for (std::size_t t = 0; t < k; ++t) {
        ra[t] = a.generators()[g][t];
        rb[t] = b.generators()[g][sigma[t]];
      }
      pa.push_back(std::move(ra));
      pb.push_back(std::move(rb));
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || ca[v] != cb[w]) continue;
      sigma[v] = w;
      taken[w] = 1;
      if (prefix_consistent(v + 1) && search(v + 1)) return true;
      taken[w] = 0;
    }
    return false;
  };
  return search(0);
}

}  // namespace lcmlat
