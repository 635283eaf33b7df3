#include "doctest.h"

#include "lcmlat/error.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/resolution.hpp"
#include "lcmlat/verify.hpp"
#include "oracles.hpp"

using namespace lcmlat;

TEST_CASE("graph basics and families") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 9), Error);
  CHECK(g.complement().edge_count() == 4);
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(4).n() == 5);
  CHECK(is_star(star_graph(4)));
  CHECK(is_triangle(complete_graph(3)));
  CHECK(disjoint_union(path_graph(2), cycle_graph(3)).edge_count() == 4);
  CHECK_THROWS_AS(edge_ideal(Graph(3)), Error);
  for (const auto& id : graph_fixture_ids()) CHECK(graph_fixture(id).is_connected());
  CHECK_THROWS_AS(graph_fixture("nope"), Error);
}

TEST_CASE("edge ideal lattice shortcut equals the generic LCM lattice") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& G : connected_labeled_graphs(n)) {
      auto fast = graph_lcm_lattice(G);
      auto slow = lcm_lattice(edge_ideal(G));
      REQUIRE(fast.size() == slow.size());
      REQUIRE(fast.labels() == slow.labels());
      REQUIRE(fast.cover_pairs() == slow.cover_pairs());
    }
}

TEST_CASE("induced subgraph predicates match four-vertex scans") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& G : connected_labeled_graphs(n)) {
      REQUIRE(is_gap_free(G) == !oracle::has_gap(G));
      REQUIRE(is_c4_free(G) == !oracle::has_c4(G));
      REQUIRE(is_diamond_free(G) == !oracle::has_diamond(G));
      REQUIRE(complement_is_c4_free(G) == is_gap_free(G));
      bool disjoint = false;
      auto e = G.edges();
      for (auto [a, b] : e)
        for (auto [c, d] : e) disjoint = disjoint || (a != c && a != d && b != c && b != d);
      REQUIRE(has_no_disjoint_edges(G) == !disjoint);
    }
}

TEST_CASE("graph-side characterizations agree with lattice verdicts") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& G : connected_labeled_graphs(n)) {
      auto rep = graph_lattice_report(G, false);
      oracle::Poset p(graph_lcm_lattice(G));
      CHECK(rep.lattice.holds(Property::graded) == p.graded());
      CHECK(rep.lattice.holds(Property::lower_semimodular) == oracle::lsm(p));
      CHECK(rep.lattice.holds(Property::complemented) == oracle::complemented(p));
      CHECK(rep.lattice.holds(Property::supersolvable) == oracle::supersolvable(p));
      CHECK(rep.lattice.holds(Property::coatomic) == oracle::coatomic(p));
      for (const auto& c : rep.checks) {
        if (c.name == "lsm<=>gap-c4-diamond-free") continue;
        CAPTURE(c.name);
        REQUIRE(c.agrees());
      }
      for (const auto& c : gray_area_checks(rep.lattice)) REQUIRE(c.agrees());
    }
}

TEST_CASE("the five-cycle satisfies the forbidden-subgraph list but is not lower semimodular") {
  auto C5 = cycle_graph(5);
  CHECK(is_gap_free(C5));
  CHECK(is_c4_free(C5));
  CHECK(is_diamond_free(C5));
  CHECK_FALSE(has_clique_with_unique_attachment(C5));
  auto L = graph_lcm_lattice(C5);
  CHECK(is_graded(L).holds);
  CHECK_FALSE(is_lower_semimodular(L).holds);
  CHECK_FALSE(oracle::lsm(oracle::Poset(L)));
  // x1x2x3x4 and x3x4x5x1 have rank 3, meet x3x4 of rank 1, join of rank 4.
  auto rep = graph_lattice_report(C5, false);
  auto bad = rep.disagreements();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].name == "lsm<=>gap-c4-diamond-free");
  CHECK_THROWS_AS(graph_lattice_report(C5, true), Error);
  // The clique statement does agree on every small graph.
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& G : connected_labeled_graphs(n)) {
      REQUIRE(has_clique_with_unique_attachment(G) == is_lower_semimodular(graph_lcm_lattice(G)).holds);
    }
}

TEST_CASE("clique with unique attachment") {
  CHECK(has_clique_with_unique_attachment(graph_fixture("lsm-typical")));
  CHECK(has_clique_with_unique_attachment(path_graph(4)));
  CHECK_FALSE(has_clique_with_unique_attachment(path_graph(5)));
  CHECK(has_clique_with_unique_attachment(star_graph(5)));
  CHECK_FALSE(has_clique_with_unique_attachment(cycle_graph(4)));
}

TEST_CASE("fixture values from the worked examples") {
  const auto field = FieldSpec::default_field();
  {
    auto G = graph_fixture("bipartite-cm");
    auto I = edge_ideal(G);
    CHECK(is_cohen_macaulay(I, field));
    CHECK_FALSE(is_graded(graph_lcm_lattice(G)).holds);
  }
  {
    auto G = graph_fixture("fig5");
    auto I = edge_ideal(G);
    auto L = graph_lcm_lattice(G);
    CHECK(projective_dimension(I, field) == 4);
    CHECK(height(L) == 4);
    CHECK_FALSE(is_graded(L).holds);
  }
  {
    auto G = graph_fixture("fig6");
    auto L = graph_lcm_lattice(G);
    CHECK(is_complemented(L).holds);
    CHECK(projective_dimension(edge_ideal(G), field) == 4);
    CHECK(height(L) == 5);
  }
  {
    auto G = graph_fixture("fig3");
    CHECK(has_universal_edge(G));
    CHECK(is_supersolvable(graph_lcm_lattice(G)).holds);
  }
  {
    auto L = graph_lcm_lattice(path_graph(5));
    CHECK(projective_dimension(edge_ideal(path_graph(5)), field) == 3);
    CHECK(height(L) == 4);
    CHECK(is_strongly_complemented(L).holds);
  }
}

TEST_CASE("the six-vertex complemented example is strongly complemented") {
  // Vertices 0..5 carry variables x1..x6. Coatoms omit x1, x3, x4 or x6.
  auto L = graph_lcm_lattice(graph_fixture("fig6"));
  oracle::Poset p(L);
  CHECK(is_strongly_complemented(L).holds);
  CHECK(oracle::strongly_complemented(p));
  auto find = [&](const Monomial& m) {
    for (Element e = 0; e < L.size(); ++e)
      if (L.label(e) == m) return e;
    FAIL("label missing");
    return Element{0};
  };
  // The coatoms without x3, x4 and x1 meet in x5x6: the gcd x2x5x6 leaves x2 isolated.
  auto c3 = find(Monomial{1, 1, 0, 1, 1, 1});
  auto c4 = find(Monomial{1, 1, 1, 0, 1, 1});
  auto c1 = find(Monomial{0, 1, 1, 1, 1, 1});
  auto y = L.meet(L.meet(c3, c4), c1);
  CHECK(L.label(y) == Monomial{0, 0, 0, 0, 1, 1});
  auto x = find(Monomial{1, 1, 1, 1, 0, 0});
  CHECK(L.meet(x, y) == L.bottom());
  CHECK(L.join(x, y) == L.top());
  CHECK(std::find(atoms(L).begin(), atoms(L).end(), y) != atoms(L).end());
}

TEST_CASE("linear presentation via interval connectivity matches Betti numbers") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& G : connected_labeled_graphs(n)) {
      auto t = betti_table(edge_ideal(G), FieldSpec::prime(2));
      bool linear = true;
      for (const auto& [key, rank] : t.graded())
        if (key.first == 2 && key.second > 3 && rank) linear = false;
      REQUIRE(is_linearly_presented(G) == linear);
    }
}

TEST_CASE("rank formula on graded graph lattices") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& G : connected_labeled_graphs(n)) {
      auto L = graph_lcm_lattice(G);
      auto rf = graded_rank_function(L);
      if (!rf) continue;
      for (Element m = 0; m < L.size(); ++m)
        if (m != L.bottom()) REQUIRE(rf->ranks[m] == static_cast<int>(L.label(m).degree()) - 1);
    }
}
