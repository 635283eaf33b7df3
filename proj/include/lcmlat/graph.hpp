#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcmlat/field.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"

namespace lcmlat {

using VertexMask = std::uint64_t;

/// Finite simple graph on vertices 0..n-1 (n <= 64), adjacency as bitmasks.
class Graph {
public:
  static constexpr std::size_t kMaxVertices = 64;

  explicit Graph(std::size_t n = 0);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  void add_edge(std::size_t u, std::size_t v);

  std::size_t n() const noexcept { return adj_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1u; }
  VertexMask neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;
  bool is_connected() const;
  Graph complement() const;
  Graph induced(VertexMask vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<VertexMask> adj_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// St_n: one center joined to n leaves (n + 1 vertices).
Graph star_graph(std::size_t n);
/// Disjoint union; vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Named example graphs: fig3, fig5, fig6, bipartite-cm, graphic-matroid, lsm-typical.
Graph graph_fixture(std::string_view id);
std::vector<std::string> graph_fixture_ids();

/// One generator x_u x_v per edge, in edge order.
MonomialIdeal edge_ideal(const Graph& G);

/**
 * LCM lattice of the edge ideal built on vertex sets: elements are unions of
 * edges, joins are unions. Element order and labels coincide with
 * lcm_lattice(edge_ideal(G)).
 */
FiniteLattice graph_lcm_lattice(const Graph& G);

bool is_gap_free(const Graph& G);
bool complement_is_c4_free(const Graph& G);
bool is_c4_free(const Graph& G);
bool is_diamond_free(const Graph& G);
/// Some edge shares a vertex with every other edge.
bool has_universal_edge(const Graph& G);
bool has_no_disjoint_edges(const Graph& G);
std::size_t min_degree(const Graph& G);
/// Some vertex lies on every edge (and there is at least one edge).
bool is_star(const Graph& G);
bool is_triangle(const Graph& G);
/// A clique H such that every vertex outside H has exactly one neighbor, and it lies in H.
bool has_clique_with_unique_attachment(const Graph& G);

/**
 * For every union of edges A, some independent X inside A dominates the
 * vertices outside A whose neighbors all lie in A.
 */
bool complemented_via_independent_sets(const Graph& G);

/// beta_{2,j}(S/I(G)) = 0 for all j > 3, from connectivity of lattice intervals.
bool is_linearly_presented(const Graph& G);

struct TheoremCheck {
  std::string name;
  bool lattice_side = false;
  bool graph_side = false;

  bool agrees() const noexcept { return lattice_side == graph_side; }
};

struct GraphLatticeReport {
  PropertyReport lattice;
  std::vector<TheoremCheck> checks;

  std::vector<TheoremCheck> disagreements() const;
};

/// Pairs each lattice verdict on L_{I(G)} with its graph-side characterization.
/// Throws TheoremViolation when `enforce` is set and a pair disagrees.
GraphLatticeReport graph_lattice_report(const Graph& G, bool enforce = true);

/// Graph-side statement plus lattice-side verdict for the gray-area implications.
std::vector<TheoremCheck> gray_area_checks(const PropertyReport& lattice);

}  // namespace lcmlat
