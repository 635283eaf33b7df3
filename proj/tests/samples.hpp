#pragma once

#include <string>
#include <vector>

#include "lcmlat/constructions.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/verify.hpp"

namespace samples {

struct Named {
  std::string name;
  lcmlat::FiniteLattice lattice;
};

inline lcmlat::FiniteLattice chain(std::size_t n) {
  std::vector<lcmlat::CoverPair> c;
  for (lcmlat::Element i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return lcmlat::FiniteLattice::from_covers(n, c);
}

inline lcmlat::FiniteLattice pentagon() {
  return lcmlat::FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

/// Small lattices of assorted shapes (at most ~32 elements each).
inline std::vector<Named> small_lattices(std::size_t random_count = 12) {
  using namespace lcmlat;
  std::vector<Named> out = {
      {"chain1", chain(1)},
      {"chain2", chain(2)},
      {"chain4", chain(4)},
      {"pentagon", pentagon()},
      {"M3", mn_lattice(3)},
      {"M5", mn_lattice(5)},
      {"subspace(2,2)", subspace_lattice(2, 2)},
      {"subspace(2,3)", subspace_lattice(2, 3)},
      {"fano", fano_lattice()},
      {"graphic-matroid", graphic_matroid_lattice()},
      {"P5", graph_lcm_lattice(path_graph(5))},
      {"C5", graph_lcm_lattice(cycle_graph(5))},
      {"K4", graph_lcm_lattice(complete_graph(4))},
      {"bowtie", graph_lcm_lattice(graph_fixture("fig5"))},
      {"fig6", graph_lcm_lattice(graph_fixture("fig6"))},
      {"bipartite-cm", graph_lcm_lattice(graph_fixture("bipartite-cm"))},
      {"pentagon x chain2", product(pentagon(), chain(2))},
      {"dual P5", dual(graph_lcm_lattice(path_graph(5)))},
  };
  for (std::size_t i = 0; i < random_count; ++i) {
    auto rng = instance_rng(99, i);
    auto I = random_ideal(rng, {4, 5, 3});
    auto L = lcm_lattice(I);
    if (L.size() <= 32) out.push_back({"random#" + std::to_string(i) + " " + I.to_string(), L});
  }
  return out;
}

}  // namespace samples
