#pragma once

// Brute-force reference implementations. Everything here works from the
// order relation alone and uses textbook definitions directly.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lcmlat/graph.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"

namespace oracle {

using lcmlat::Element;

struct Poset {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;

  Poset() = default;
  explicit Poset(const lcmlat::FiniteLattice& L) : n(L.size()), le(n, std::vector<bool>(n)) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) le[x][y] = L.leq(x, y);
  }

  /// Order from labels: x <= y iff label(x) divides label(y).
  static Poset from_labels(const std::vector<lcmlat::Monomial>& labels) {
    Poset p;
    p.n = labels.size();
    p.le.assign(p.n, std::vector<bool>(p.n));
    for (std::size_t x = 0; x < p.n; ++x)
      for (std::size_t y = 0; y < p.n; ++y) p.le[x][y] = labels[x].divides(labels[y]);
    return p;
  }

  bool lt(Element x, Element y) const { return x != y && le[x][y]; }

  Element bottom() const {
    for (Element x = 0; x < n; ++x)
      if (std::all_of(le[x].begin(), le[x].end(), [](bool b) { return b; })) return x;
    return 0;
  }
  Element top() const {
    for (Element x = 0; x < n; ++x) {
      bool ok = true;
      for (Element y = 0; y < n; ++y) ok = ok && le[y][x];
      if (ok) return x;
    }
    return 0;
  }

  Element meet(Element x, Element y) const {
    for (Element z = 0; z < n; ++z) {
      if (!le[z][x] || !le[z][y]) continue;
      bool greatest = true;
      for (Element w = 0; w < n; ++w)
        if (le[w][x] && le[w][y] && !le[w][z]) greatest = false;
      if (greatest) return z;
    }
    throw std::logic_error("no meet");
  }
  Element join(Element x, Element y) const {
    for (Element z = 0; z < n; ++z) {
      if (!le[x][z] || !le[y][z]) continue;
      bool least = true;
      for (Element w = 0; w < n; ++w)
        if (le[x][w] && le[y][w] && !le[z][w]) least = false;
      if (least) return z;
    }
    throw std::logic_error("no join");
  }

  bool covers(Element x, Element y) const {
    if (!lt(x, y)) return false;
    for (Element z = 0; z < n; ++z)
      if (lt(x, z) && lt(z, y)) return false;
    return true;
  }

  std::vector<std::vector<Element>> maximal_chains() const {
    std::vector<std::vector<Element>> out;
    std::vector<Element> chain{bottom()};
    const auto t = top();
    std::function<void()> go = [&] {
      if (chain.back() == t) {
        out.push_back(chain);
        return;
      }
      for (Element y = 0; y < n; ++y)
        if (covers(chain.back(), y)) {
          chain.push_back(y);
          go();
          chain.pop_back();
        }
    };
    go();
    return out;
  }

  bool graded() const {
    std::set<std::size_t> lengths;
    for (const auto& c : maximal_chains()) lengths.insert(c.size());
    return lengths.size() == 1;
  }

  /// Longest chain length from the bottom.
  int rank(Element x) const {
    if (rank_cache.empty()) rank_cache.assign(n, -1);
    if (rank_cache[x] >= 0) return rank_cache[x];
    int best = 0;
    for (Element y = 0; y < n; ++y)
      if (covers(y, x)) best = std::max(best, rank(y) + 1);
    return rank_cache[x] = best;
  }

  mutable std::vector<int> rank_cache;

  std::vector<Element> atoms() const {
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x)
      if (covers(bottom(), x)) out.push_back(x);
    return out;
  }
  std::vector<Element> coatoms() const {
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x)
      if (covers(x, top())) out.push_back(x);
    return out;
  }

  /// Joins (or meets) of all subsets of `gens`, starting from `unit`.
  std::set<Element> closure(const std::vector<Element>& gens, Element unit, bool joins) const {
    std::set<Element> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
      Element acc = unit;
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (mask >> k & 1u) acc = joins ? join(acc, gens[k]) : meet(acc, gens[k]);
      out.insert(acc);
    }
    return out;
  }

  bool is_complement(Element x, Element y) const { return meet(x, y) == bottom() && join(x, y) == top(); }
};

inline bool rank_relation(const Poset& p, int sign) {
  if (!p.graded()) return false;
  for (Element x = 0; x < p.n; ++x)
    for (Element y = 0; y < p.n; ++y) {
      int lhs = p.rank(x) + p.rank(y);
      int rhs = p.rank(p.meet(x, y)) + p.rank(p.join(x, y));
      if ((sign > 0 && lhs < rhs) || (sign < 0 && lhs > rhs) || (sign == 0 && lhs != rhs)) return false;
    }
  return true;
}

inline bool usm(const Poset& p) { return rank_relation(p, +1); }
inline bool lsm(const Poset& p) { return rank_relation(p, -1); }
inline bool modular(const Poset& p) { return rank_relation(p, 0); }

inline bool atomic(const Poset& p) {
  auto joins = p.closure(p.atoms(), p.bottom(), true);
  return joins.size() == p.n;
}
inline bool coatomic(const Poset& p) {
  auto meets = p.closure(p.coatoms(), p.top(), false);
  return meets.size() == p.n;
}

inline bool distributive(const Poset& p) {
  for (Element x = 0; x < p.n; ++x)
    for (Element y = 0; y < p.n; ++y)
      for (Element z = 0; z < p.n; ++z)
        if (p.meet(x, p.join(y, z)) != p.join(p.meet(x, y), p.meet(x, z))) return false;
  return true;
}

inline std::size_t complement_count(const Poset& p, Element x) {
  std::size_t c = 0;
  for (Element y = 0; y < p.n; ++y) c += p.is_complement(x, y);
  return c;
}

inline bool complemented(const Poset& p) {
  for (Element x = 0; x < p.n; ++x)
    if (complement_count(p, x) == 0) return false;
  return true;
}
inline bool uniquely_complemented(const Poset& p) {
  for (Element x = 0; x < p.n; ++x)
    if (complement_count(p, x) != 1) return false;
  return true;
}
inline bool boolean(const Poset& p) { return distributive(p) && uniquely_complemented(p); }
inline bool geometric(const Poset& p) { return atomic(p) && usm(p); }

inline bool strongly_complemented(const Poset& p) {
  auto meets = p.closure(p.coatoms(), p.top(), false);
  auto joins = p.closure(p.atoms(), p.bottom(), true);
  for (Element x = 0; x < p.n; ++x) {
    bool a = std::any_of(meets.begin(), meets.end(), [&](Element y) { return p.is_complement(x, y); });
    bool b = std::any_of(joins.begin(), joins.end(), [&](Element z) { return p.is_complement(x, z); });
    if (!a || !b) return false;
  }
  return true;
}

inline bool supersolvable(const Poset& p) {
  if (!p.graded()) return false;
  for (const auto& chain : p.maximal_chains()) {
    bool ok = true;
    for (Element m : chain)
      for (Element x = 0; x < p.n && ok; ++x)
        ok = p.rank(m) + p.rank(x) == p.rank(p.meet(m, x)) + p.rank(p.join(m, x));
    if (ok) return true;
  }
  return false;
}

/// Recursive definition: mu(x, x) = 1, mu(x, y) = -sum_{x <= z < y} mu(x, z).
inline std::int64_t mobius(const Poset& p, Element x, Element y) {
  if (x == y) return 1;
  if (!p.le[x][y]) return 0;
  std::int64_t s = 0;
  for (Element z = 0; z < p.n; ++z)
    if (p.le[x][z] && p.lt(z, y)) s += mobius(p, x, z);
  return -s;
}

/// Largest antichain among meet-irreducibles, by subset scan.
inline std::size_t mi_width(const Poset& p) {
  std::vector<Element> mi;
  for (Element x = 0; x < p.n; ++x) {
    if (x == p.top()) continue;
    std::size_t up = 0;
    for (Element y = 0; y < p.n; ++y) up += p.covers(x, y);
    if (up == 1) mi.push_back(x);
  }
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mi.size()); ++mask) {
    std::vector<Element> s;
    for (std::size_t k = 0; k < mi.size(); ++k)
      if (mask >> k & 1u) s.push_back(mi[k]);
    bool anti = true;
    for (auto a : s)
      for (auto b : s) anti = anti && (a == b || !p.le[a][b]);
    if (anti) best = std::max(best, s.size());
  }
  return best;
}

/// All lcms of nonempty generator subsets together with 1.
inline std::set<lcmlat::Monomial> lcm_set(const lcmlat::MonomialIdeal& I) {
  std::set<lcmlat::Monomial> out{lcmlat::Monomial(I.nvars())};
  const auto& g = I.generators();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
    lcmlat::Monomial m(I.nvars());
    for (std::size_t k = 0; k < g.size(); ++k)
      if (mask >> k & 1u) m = lcmlat::lcm(m, g[k]);
    out.insert(m);
  }
  return out;
}

/// Minimum vertex cover of the generator supports, by subset scan over variables.
inline std::size_t height(const lcmlat::MonomialIdeal& I) {
  const auto n = I.nvars();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool hits = std::all_of(I.generators().begin(), I.generators().end(), [&](const lcmlat::Monomial& m) {
      for (auto v : m.support())
        if (mask >> v & 1u) return true;
      return false;
    });
    if (hits) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Induced subgraph on four vertices matches a pattern given by its degree sequence and edge count.
inline bool has_induced(const lcmlat::Graph& G, std::size_t edges, std::vector<std::size_t> degrees) {
  std::sort(degrees.begin(), degrees.end());
  const auto n = G.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          std::array<std::size_t, 4> v{a, b, c, d};
          std::vector<std::size_t> deg(4, 0);
          std::size_t e = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (G.adjacent(v[i], v[j])) ++e, ++deg[i], ++deg[j];
          std::sort(deg.begin(), deg.end());
          if (e == edges && deg == degrees) return true;
        }
  return false;
}

inline bool has_gap(const lcmlat::Graph& G) { return has_induced(G, 2, {1, 1, 1, 1}); }
inline bool has_c4(const lcmlat::Graph& G) { return has_induced(G, 4, {2, 2, 2, 2}); }
inline bool has_diamond(const lcmlat::Graph& G) { return has_induced(G, 5, {2, 2, 3, 3}); }

}  // namespace oracle
