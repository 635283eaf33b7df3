#include "lcmlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

void check_capacity(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "a lattice needs at least one element");
  if (n > kMaxLatticeElements)
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " elements exceeds the capacity of " + std::to_string(kMaxLatticeElements));
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::size_t n, const std::vector<CoverPair>& covers,
                                         std::vector<Monomial> labels) {
  check_capacity(n);
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw Error(ErrorCode::BadParameter, "cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") out of range");
    if (lo == hi) throw Error(ErrorCode::CyclicCovers, "self-cover at element " + std::to_string(lo));
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  std::vector<Element> topo;
  topo.reserve(n);
  for (Element v = 0; v < n; ++v)
    if (indegree[v] == 0) topo.push_back(v);
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (auto w : succ[topo[i]])
      if (--indegree[w] == 0) topo.push_back(w);
  if (topo.size() != n) throw Error(ErrorCode::CyclicCovers, "cover relation contains a directed cycle");

  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element v = 0; v < n; ++v) down[v].set(v);
  for (auto v : topo)
    for (auto w : succ[v]) down[w] |= down[v];

  FiniteLattice L;
  L.build(std::move(down), std::move(labels));
  return L;
}

FiniteLattice FiniteLattice::from_down_sets(std::vector<ElementSet> down, std::vector<Monomial> labels) {
  const auto n = down.size();
  check_capacity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (down[i].size() != n || !down[i].test(i))
      throw Error(ErrorCode::BadParameter, "down-set relation is not reflexive");
    bool ok = true;
    down[i].for_each([&](std::size_t j) {
      if (j != i && down[j].test(i)) ok = false;
      if (!down[j].is_subset_of(down[i])) ok = false;
    });
    if (!ok) throw Error(ErrorCode::BadParameter, "down-set relation is not a partial order");
  }
  FiniteLattice L;
  L.build(std::move(down), std::move(labels));
  return L;
}

void FiniteLattice::build(std::vector<ElementSet> down, std::vector<Monomial> labels) {
  n_ = down.size();
  down_ = std::move(down);
  up_.assign(n_, ElementSet(n_));
  for (std::size_t y = 0; y < n_; ++y) down_[y].for_each([&](std::size_t x) { up_[x].set(y); });

  std::vector<std::size_t> down_count(n_), up_count(n_);
  std::vector<Element> minimal, maximal;
  for (Element x = 0; x < n_; ++x) {
    down_count[x] = down_[x].count();
    up_count[x] = up_[x].count();
    if (down_count[x] == 1) minimal.push_back(x);
    if (up_count[x] == 1) maximal.push_back(x);
  }
  if (minimal.size() != 1 || maximal.size() != 1) {
    auto describe = [](const std::vector<Element>& v) {
      std::string s;
      for (auto e : v) s += (s.empty() ? "" : ",") + std::to_string(e);
      return s;
    };
    throw Error(ErrorCode::NotBounded, "minimal elements {" + describe(minimal) + "}, maximal elements {" +
                                           describe(maximal) + "}");
  }
  bottom_ = minimal.front();
  top_ = maximal.front();

  order_.resize(n_);
  std::iota(order_.begin(), order_.end(), Element{0});
  std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) { return down_count[a] < down_count[b]; });

  // The meet of x and y is the common lower bound with the largest down-set;
  // it is a genuine meet only if its down-set is the whole common set.
  meet_.assign(n_ * n_, 0);
  join_.assign(n_ * n_, 0);
  for (Element x = 0; x < n_; ++x) {
    for (Element y = x; y < n_; ++y) {
      Element m, j;
      if (leq(x, y)) {
        m = x;
        j = y;
      } else if (leq(y, x)) {
        m = y;
        j = x;
      } else {
        std::size_t common = 0, best = 0;
        m = bottom_;
        ElementSet::for_each_common(down_[x], down_[y], [&](std::size_t z) {
          ++common;
          if (down_count[z] > best) {
            best = down_count[z];
            m = static_cast<Element>(z);
          }
        });
        if (best != common)
          throw Error(ErrorCode::NotALattice,
                      "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no unique meet");
        common = 0;
        best = 0;
        j = top_;
        ElementSet::for_each_common(up_[x], up_[y], [&](std::size_t z) {
          ++common;
          if (up_count[z] > best) {
            best = up_count[z];
            j = static_cast<Element>(z);
          }
        });
        if (best != common)
          throw Error(ErrorCode::NotALattice,
                      "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no unique join");
      }
      meet_[x * n_ + y] = meet_[y * n_ + x] = m;
      join_[x * n_ + y] = join_[y * n_ + x] = j;
    }
  }

  upper_.assign(n_, {});
  lower_.assign(n_, {});
  for (Element x = 0; x < n_; ++x) {
    up_[x].for_each([&](std::size_t y) {
      if (y == x) return;
      if (ElementSet::intersection_count(up_[x], down_[y]) == 2) {
        upper_[x].push_back(static_cast<Element>(y));
        lower_[y].push_back(x);
      }
    });
  }

  if (!labels.empty()) {
    if (labels.size() != n_) throw Error(ErrorCode::BadParameter, "label count does not match element count");
    for (Element x = 0; x < n_; ++x) {
      if (labels[x].nvars() != labels[0].nvars())
        throw Error(ErrorCode::BadParameter, "labels live in different polynomial rings");
      for (Element y = 0; y < n_; ++y) {
        if (leq(x, y) != labels[x].divides(labels[y]))
          throw Error(ErrorCode::BadParameter, "label divisibility does not match the order at (" + std::to_string(x) +
                                                   "," + std::to_string(y) + ")");
        if (y > x && labels[join(x, y)] != lcm(labels[x], labels[y]))
          throw Error(ErrorCode::BadParameter, "label of a join is not the lcm of the labels");
      }
    }
  }
  labels_ = std::move(labels);
}

std::vector<CoverPair> FiniteLattice::cover_pairs() const {
  std::vector<CoverPair> out;
  for (Element x = 0; x < n_; ++x)
    for (auto y : upper_[x]) out.emplace_back(x, y);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Element> atoms(const FiniteLattice& L) {
  if (L.size() == 1) return {};
  return L.upper_covers(L.bottom());
}

std::vector<Element> coatoms(const FiniteLattice& L) {
  if (L.size() == 1) return {};
  return L.lower_covers(L.top());
}

std::vector<Element> meet_irreducibles(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element x = 0; x < L.size(); ++x)
    if (x != L.top() && L.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Element> join_irreducibles(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element x = 0; x < L.size(); ++x)
    if (x != L.bottom() && L.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<int> longest_chain_depths(const FiniteLattice& L) {
  std::vector<int> depth(L.size(), 0);
  for (auto x : L.linear_extension())
    for (auto y : L.upper_covers(x)) depth[y] = std::max(depth[y], depth[x] + 1);
  return depth;
}

int height(const FiniteLattice& L) { return longest_chain_depths(L)[L.top()]; }

std::optional<RankFunction> graded_rank_function(const FiniteLattice& L) {
  auto depth = longest_chain_depths(L);
  for (Element x = 0; x < L.size(); ++x)
    for (auto y : L.upper_covers(x))
      if (depth[y] != depth[x] + 1) return std::nullopt;
  RankFunction r;
  r.height = depth[L.top()];
  r.ranks = std::move(depth);
  return r;
}

std::int64_t mobius(const FiniteLattice& L, Element x, Element y) {
  if (x >= L.size() || y >= L.size()) throw Error(ErrorCode::BadParameter, "element out of range");
  if (!L.leq(x, y))
    throw Error(ErrorCode::NotComparable, std::to_string(x) + " is not below " + std::to_string(y));
  std::vector<std::int64_t> mu(L.size(), 0);
  std::vector<Element> interval;
  for (auto z : L.linear_extension())
    if (L.leq(x, z) && L.leq(z, y)) interval.push_back(z);
  for (auto z : interval) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (auto w : interval) {
      if (w == z) break;
      if (L.leq(w, z)) s += mu[w];
    }
    mu[z] = -s;
  }
  return mu[y];
}

namespace {

std::vector<Element> open_interval(const FiniteLattice& L, Element lo, Element hi) {
  if (lo >= L.size() || hi >= L.size()) throw Error(ErrorCode::BadParameter, "element out of range");
  if (!L.less(lo, hi))
    throw Error(ErrorCode::NotComparable, std::to_string(lo) + " is not strictly below " + std::to_string(hi));
  std::vector<Element> out;
  for (auto z : L.linear_extension())
    if (z != lo && z != hi && L.leq(lo, z) && L.leq(z, hi)) out.push_back(z);
  return out;
}

}  // namespace

SimplicialComplexData open_interval_order_complex(const FiniteLattice& L, Element lo, Element hi, int max_dim) {
  auto verts = open_interval(L, lo, hi);
  SimplicialComplexData k;
  k.vertices.assign(verts.begin(), verts.end());
  const auto m = verts.size();
  std::vector<std::vector<std::uint32_t>> above(m);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j)
      if (L.leq(verts[i], verts[j])) above[i].push_back(j);

  const std::size_t max_len = max_dim < 0 ? m : static_cast<std::size_t>(max_dim) + 1;
  std::vector<std::uint32_t> chain;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t v) {
    chain.push_back(v);
    k.push_face(chain);
    if (chain.size() < max_len)
      for (auto w : above[v]) extend(w);
    chain.pop_back();
  };
  for (std::uint32_t v = 0; v < m; ++v) extend(v);
  return k;
}

std::size_t open_interval_components(const FiniteLattice& L, Element lo, Element hi) {
  auto verts = open_interval(L, lo, hi);
  std::vector<Element> parent(L.size());
  std::iota(parent.begin(), parent.end(), Element{0});
  std::function<Element(Element)> find = [&](Element x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  ElementSet in(L.size());
  for (auto v : verts) in.set(v);
  std::size_t components = verts.size();
  for (auto v : verts)
    for (auto w : L.upper_covers(v)) {
      if (!in.test(w)) continue;
      auto a = find(v), b = find(w);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

std::uint64_t open_interval_chain_count(const FiniteLattice& L, Element lo, Element hi) {
  auto verts = open_interval(L, lo, hi);
  std::vector<std::uint64_t> ending(verts.size(), 1);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (L.leq(verts[j], verts[i])) ending[i] += ending[j];
    total += ending[i];
  }
  return total;
}

SimplicialComplexData atom_crosscut_complex(const FiniteLattice& L, Element hi) {
  if (hi >= L.size()) throw Error(ErrorCode::BadParameter, "element out of range");
  std::vector<Element> below;
  for (auto a : atoms(L))
    if (L.leq(a, hi)) below.push_back(a);
  std::sort(below.begin(), below.end());
  SimplicialComplexData k;
  k.vertices.assign(below.begin(), below.end());
  std::vector<std::uint32_t> face;
  // Supersets of a set joining to hi also join to hi, so the search prunes there.
  std::function<void(std::uint32_t, Element)> extend = [&](std::uint32_t start, Element join) {
    for (std::uint32_t v = start; v < below.size(); ++v) {
      auto j = L.join(join, below[v]);
      if (j == hi) continue;
      face.push_back(v);
      k.push_face(face);
      extend(v + 1, j);
      face.pop_back();
    }
  };
  extend(0, L.bottom());
  return k;
}

FiniteLattice dual(const FiniteLattice& L) {
  std::vector<ElementSet> down(L.size());
  for (Element x = 0; x < L.size(); ++x) down[x] = L.up_set(x);
  return FiniteLattice::from_down_sets(std::move(down));
}

FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2) {
  const auto n1 = L1.size(), n2 = L2.size();
  const auto n = n1 * n2;
  if (n > kMaxLatticeElements) throw Error(ErrorCode::TooLarge, "product exceeds lattice capacity");
  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element a = 0; a < n1; ++a)
    for (Element b = 0; b < n2; ++b) {
      auto& d = down[a * n2 + b];
      L1.down_set(a).for_each([&](std::size_t c) {
        L2.down_set(b).for_each([&](std::size_t e) { d.set(c * n2 + e); });
      });
    }
  std::vector<Monomial> labels;
  if (L1.has_labels() && L2.has_labels()) {
    labels.reserve(n);
    for (Element a = 0; a < n1; ++a)
      for (Element b = 0; b < n2; ++b) {
        auto e = L1.label(a).exponents();
        const auto& f = L2.label(b).exponents();
        e.insert(e.end(), f.begin(), f.end());
        labels.emplace_back(std::move(e));
      }
  }
  return FiniteLattice::from_down_sets(std::move(down), std::move(labels));
}

std::size_t mi_width(const FiniteLattice& L) {
  // Dilworth: width = |P| - maximum matching in the strict comparability bipartite graph.
  auto mi = meet_irreducibles(L);
  const auto k = mi.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && L.leq(mi[i], mi[j])) adj[i].push_back(j);
  std::vector<std::ptrdiff_t> match_right(k, -1);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (auto v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<std::ptrdiff_t>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < k; ++u) {
    visited.assign(k, 0);
    if (augment(u)) ++matching;
  }
  return k - matching;
}

}  // namespace lcmlat
