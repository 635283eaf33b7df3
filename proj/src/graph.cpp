#include "lcmlat/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

constexpr VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// Calls f on every 4-element vertex subset as a sorted array.
template <class F>
bool any_four(const Graph& G, F&& f) {
  const auto n = G.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (f(std::array<std::size_t, 4>{a, b, c, d})) return true;
  return false;
}

std::size_t induced_edges(const Graph& G, const std::array<std::size_t, 4>& q) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) e += G.adjacent(q[i], q[j]);
  return e;
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n, 0) {
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "graphs are limited to 64 vertices");
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n() || v >= n())
    throw Error(ErrorCode::BadParameter, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw Error(ErrorCode::BadParameter, "loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

std::size_t Graph::degree(std::size_t v) const { return popcount(adj_[v]); }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n(); ++u)
    for_each_vertex(adj_[u] & ~((bit(u) << 1) - 1), [&](std::size_t v) { out.emplace_back(u, v); });
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (auto a : adj_) s += popcount(a);
  return s / 2;
}

bool Graph::is_connected() const {
  if (n() == 0) return true;
  VertexMask seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](std::size_t v) { next |= adj_[v]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return popcount(seen) == n();
}

Graph Graph::complement() const {
  Graph c(n());
  for (std::size_t u = 0; u < n(); ++u)
    for (std::size_t v = u + 1; v < n(); ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph Graph::induced(VertexMask vertices) const {
  std::vector<std::size_t> keep;
  for_each_vertex(vertices, [&](std::size_t v) { keep.push_back(v); });
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

Graph path_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "path graphs need n >= 2");
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::BadParameter, "cycle graphs need n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "complete graphs need n >= 2");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "star graphs need n >= 1 leaves");
  Graph g(n + 1);
  for (std::size_t v = 1; v <= n; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.n() + h.n());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(g.n() + a, g.n() + b);
  return u;
}

Graph graph_fixture(std::string_view id) {
  if (id == "bipartite-cm") return Graph(6, {{0, 3}, {0, 5}, {1, 4}, {1, 5}, {2, 5}});
  if (id == "graphic-matroid") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (id == "fig5") return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  if (id == "fig6") return Graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  // Vertices a..k as 0..10.
  if (id == "fig3")
    return Graph(11, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10}, {1, 9}, {1, 10}});
  // Vertices a..j as 0..9.
  if (id == "lsm-typical")
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 2}, {1, 3}, {3, 4}});
  throw Error(ErrorCode::BadParameter, "unknown graph fixture '" + std::string(id) + "'");
}

std::vector<std::string> graph_fixture_ids() {
  return {"fig3", "fig5", "fig6", "bipartite-cm", "graphic-matroid", "lsm-typical"};
}

MonomialIdeal edge_ideal(const Graph& G) {
  auto edges = G.edges();
  if (edges.empty()) throw Error(ErrorCode::NoEdges, "the edge ideal of an edgeless graph is zero");
  std::vector<Monomial> gens;
  for (auto [u, v] : edges) gens.push_back(Monomial::from_support(G.n(), {u, v}));
  return minimalize(gens);
}

namespace {

Monomial mask_monomial(std::size_t n, VertexMask m) {
  Monomial x(n);
  for_each_vertex(m, [&](std::size_t v) { x[v] = 1; });
  return x;
}

}  // namespace

FiniteLattice graph_lcm_lattice(const Graph& G) {
  auto edges = G.edges();
  if (edges.empty()) throw Error(ErrorCode::NoEdges, "the edge ideal of an edgeless graph is zero");
  std::vector<VertexMask> atoms_masks;
  for (auto [u, v] : edges) atoms_masks.push_back(bit(u) | bit(v));

  std::unordered_set<VertexMask> seen(atoms_masks.begin(), atoms_masks.end());
  std::vector<VertexMask> rest, frontier = atoms_masks;
  while (!frontier.empty()) {
    std::vector<VertexMask> next;
    for (auto m : frontier)
      for (auto e : atoms_masks)
        if (seen.insert(m | e).second) {
          rest.push_back(m | e);
          next.push_back(m | e);
          if (seen.size() + 1 > kMaxLatticeElements) throw Error(ErrorCode::TooLarge, "graph LCM lattice too large");
        }
    frontier = std::move(next);
  }
  const auto n = G.n();
  std::sort(rest.begin(), rest.end(), [&](VertexMask a, VertexMask b) {
    return degree_lex_less(mask_monomial(n, a), mask_monomial(n, b));
  });
  std::vector<VertexMask> elems{0};
  elems.insert(elems.end(), atoms_masks.begin(), atoms_masks.end());
  elems.insert(elems.end(), rest.begin(), rest.end());

  const auto N = elems.size();
  std::vector<ElementSet> down(N, ElementSet(N));
  std::vector<Monomial> labels;
  labels.reserve(N);
  for (std::size_t y = 0; y < N; ++y) {
    labels.push_back(mask_monomial(n, elems[y]));
    for (std::size_t x = 0; x < N; ++x)
      if ((elems[x] & ~elems[y]) == 0) down[y].set(x);
  }
  return FiniteLattice::from_down_sets(std::move(down), std::move(labels));
}

bool is_gap_free(const Graph& G) {
  auto edges = G.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (!G.adjacent(a, c) && !G.adjacent(a, d) && !G.adjacent(b, c) && !G.adjacent(b, d)) return false;
    }
  return true;
}

bool is_c4_free(const Graph& G) {
  return !any_four(G, [&](const std::array<std::size_t, 4>& q) {
    if (induced_edges(G, q) != 4) return false;
    for (auto v : q) {
      std::size_t d = 0;
      for (auto w : q) d += v != w && G.adjacent(v, w);
      if (d != 2) return false;
    }
    return true;
  });
}

bool complement_is_c4_free(const Graph& G) { return is_c4_free(G.complement()); }

bool is_diamond_free(const Graph& G) {
  return !any_four(G, [&](const std::array<std::size_t, 4>& q) { return induced_edges(G, q) == 5; });
}

bool has_universal_edge(const Graph& G) {
  auto edges = G.edges();
  for (auto [a, b] : edges) {
    bool all = std::all_of(edges.begin(), edges.end(),
                           [&](const auto& e) { return e.first == a || e.first == b || e.second == a || e.second == b; });
    if (all) return true;
  }
  return false;
}

bool has_no_disjoint_edges(const Graph& G) {
  auto edges = G.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) return false;
    }
  return true;
}

std::size_t min_degree(const Graph& G) {
  std::size_t m = G.n() == 0 ? 0 : G.degree(0);
  for (std::size_t v = 1; v < G.n(); ++v) m = std::min(m, G.degree(v));
  return m;
}

bool is_star(const Graph& G) {
  auto edges = G.edges();
  if (edges.empty()) return false;
  for (std::size_t c = 0; c < G.n(); ++c)
    if (std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return e.first == c || e.second == c; }))
      return true;
  return false;
}

bool is_triangle(const Graph& G) {
  auto edges = G.edges();
  if (edges.size() != 3) return false;
  VertexMask used = 0;
  for (auto [u, v] : edges) used |= bit(u) | bit(v);
  return popcount(used) == 3;
}

bool has_clique_with_unique_attachment(const Graph& G) {
  const auto n = G.n();
  if (n > 24) throw Error(ErrorCode::TooLarge, "clique search limited to 24 vertices");
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  for (VertexMask h = 1; h <= all; ++h) {
    bool clique = true;
    for_each_vertex(h, [&](std::size_t v) { clique = clique && (G.neighbors(v) | bit(v) | ~h) == ~VertexMask{0}; });
    if (!clique) continue;
    bool ok = true;
    for_each_vertex(all & ~h, [&](std::size_t v) {
      auto nb = G.neighbors(v);
      ok = ok && popcount(nb) == 1 && (nb & h) != 0;
    });
    if (ok) return true;
  }
  return false;
}

bool complemented_via_independent_sets(const Graph& G) {
  const auto n = G.n();
  auto L = graph_lcm_lattice(G);
  for (Element x = 0; x < L.size(); ++x) {
    VertexMask A = 0;
    for (auto v : L.label(x).support()) A |= bit(v);
    VertexMask isolated = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (!(A & bit(v)) && (G.neighbors(v) & ~A) == 0) isolated |= bit(v);
    if (!isolated) continue;
    bool found = false;
    // Subsets X of A, by the standard submask walk.
    for (VertexMask X = A;; X = (X - 1) & A) {
      bool independent = true;
      VertexMask dominated = 0;
      for_each_vertex(X, [&](std::size_t v) {
        independent = independent && (G.neighbors(v) & X) == 0;
        dominated |= G.neighbors(v);
      });
      if (independent && (isolated & ~dominated) == 0) {
        found = true;
        break;
      }
      if (X == 0) break;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

bool linearly_presented(const FiniteLattice& L) {
  for (Element m = 0; m < L.size(); ++m)
    if (L.label(m).degree() > 3 && open_interval_components(L, L.bottom(), m) != 1) return false;
  return true;
}

bool rank_formula_holds(const FiniteLattice& L) {
  auto rf = graded_rank_function(L);
  if (!rf) return true;
  for (Element m = 0; m < L.size(); ++m)
    if (m != L.bottom() && static_cast<std::uint64_t>(rf->ranks[m]) + 1 != L.label(m).degree()) return false;
  return true;
}

}  // namespace

bool is_linearly_presented(const Graph& G) { return linearly_presented(graph_lcm_lattice(G)); }

std::vector<TheoremCheck> GraphLatticeReport::disagreements() const {
  std::vector<TheoremCheck> out;
  for (const auto& c : checks)
    if (!c.agrees()) out.push_back(c);
  return out;
}

std::vector<TheoremCheck> gray_area_checks(const PropertyReport& r) {
  using P = Property;
  bool ss = r.holds(P::supersolvable), co = r.holds(P::coatomic), lsm = r.holds(P::lower_semimodular);
  bool comp = r.holds(P::complemented), mod = r.holds(P::modular);
  return {
      {"supersolvable+coatomic=>complemented", !(ss && co) || comp, true},
      {"lsm+coatomic=>complemented", !(lsm && co) || comp, true},
      {"supersolvable+lsm+coatomic=>modular", !(ss && lsm && co) || mod, true},
  };
}

GraphLatticeReport graph_lattice_report(const Graph& G, bool enforce) {
  if (!G.is_connected()) throw Error(ErrorCode::BadParameter, "graph must be connected");
  auto L = graph_lcm_lattice(G);
  GraphLatticeReport rep;
  rep.lattice = property_report(L);
  const auto& r = rep.lattice;
  using P = Property;

  const bool gap_free = is_gap_free(G);
  const bool no_disjoint = has_no_disjoint_edges(G);
  const bool star = is_star(G);
  const bool forbidden_free = gap_free && is_c4_free(G) && is_diamond_free(G);

  rep.checks = {
      {"graded<=>gap-free", r.holds(P::graded), gap_free},
      {"graded<=>complement-c4-free", r.holds(P::graded), complement_is_c4_free(G)},
      {"graded<=>linearly-presented", r.holds(P::graded), linearly_presented(L)},
      {"graded=>rank-formula", rank_formula_holds(L), true},
      {"modular<=>no-disjoint-edges", r.holds(P::modular), no_disjoint},
      {"geometric<=>no-disjoint-edges", r.holds(P::geometric), no_disjoint},
      {"usm<=>no-disjoint-edges", r.holds(P::upper_semimodular), no_disjoint},
      {"modular<=>triangle-or-star", r.holds(P::modular), is_triangle(G) || star},
      {"boolean<=>star", r.holds(P::boolean), star},
      {"distributive<=>star", r.holds(P::distributive), star},
      {"supersolvable<=>universal-edge", r.holds(P::supersolvable), has_universal_edge(G)},
      {"lsm<=>gap-c4-diamond-free", r.holds(P::lower_semimodular), forbidden_free},
      {"lsm<=>clique-unique-attachment", r.holds(P::lower_semimodular), has_clique_with_unique_attachment(G)},
      {"coatomic<=>star-or-min-degree-2", r.holds(P::coatomic), star || min_degree(G) >= 2},
      {"complemented<=>independent-set-condition", r.holds(P::complemented), complemented_via_independent_sets(G)},
  };
  if (enforce) {
    auto bad = rep.disagreements();
    if (!bad.empty())
      throw Error(ErrorCode::TheoremViolation,
                  bad.front().name + " fails (lattice " + (bad.front().lattice_side ? "true" : "false") + ", graph " +
                      (bad.front().graph_side ? "true" : "false") + ")");
  }
  return rep;
}

}  // namespace lcmlat
