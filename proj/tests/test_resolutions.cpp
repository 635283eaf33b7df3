#include "doctest.h"

#include "lcmlat/constructions.hpp"
#include "lcmlat/error.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/resolution.hpp"
#include "lcmlat/verify.hpp"
#include "oracles.hpp"

using namespace lcmlat;

namespace {

MonomialIdeal ideal(std::string_view text) { return parse_ideal_text(text); }

/// Stanley-Reisner ideal of the six-vertex projective plane: the ten non-face triangles.
MonomialIdeal rp2_ideal() {
  const std::vector<std::vector<std::size_t>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  std::vector<Monomial> gens;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c)
        if (std::find(faces.begin(), faces.end(), std::vector<std::size_t>{a, b, c}) == faces.end())
          gens.push_back(Monomial::from_support(6, {a, b, c}));
  return minimalize(gens);
}

}  // namespace

TEST_CASE("Fano Betti table") {
  auto I = phan_ideal(fano_lattice());
  auto t = betti_table(I);
  auto g = t.graded();
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> expected = {
      {{0, 0}, 1}, {{1, 4}, 7}, {{2, 6}, 14}, {{3, 7}, 8}};
  CHECK(g == expected);
  CHECK(t.pd() == 3);
  CHECK(t.char0_confirmed);
  CHECK(t.warnings.empty());
  auto pure = is_pure(t);
  CHECK(pure.pure);
  CHECK(pure.degrees == std::vector<std::uint64_t>{0, 4, 6, 7});
  CHECK(is_cohen_macaulay(I));
  CHECK(t.total(2) == 14);
  CHECK(t.graded_at(3, 7) == 8);
}

TEST_CASE("subspace lattices give pure resolutions with the closed-form degrees") {
  for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    CAPTURE(q);
    CAPTURE(r);
    auto I = phan_ideal(subspace_lattice(q, r));
    auto p = is_pure(I);
    REQUIRE(p.pure);
    std::vector<std::uint64_t> expected{0};
    std::uint64_t d = 0, power = 1;
    for (std::uint32_t k = 1; k < r; ++k) power *= q;
    for (std::uint32_t i = 1; i <= r; ++i, power /= q) expected.push_back(d += power);
    CHECK(p.degrees == expected);
  }
}

TEST_CASE("Betti numbers agree with the Taylor strand oracle") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    auto rng = instance_rng(11, i);
    auto I = random_ideal(rng, {5, 7, 3});
    CAPTURE(I.to_string());
    for (std::uint32_t p : {2u, 3u, 32003u}) {
      auto field = FieldSpec::prime(p);
      auto taylor = taylor_betti_table(I, field);
      for (auto complex : {IntervalComplex::order_complex, IntervalComplex::atom_crosscut, IntervalComplex::automatic}) {
        BettiOptions o;
        o.field = field;
        o.complex = complex;
        o.confirm_char0 = false;
        REQUIRE(betti_table(I, o).multigraded == taylor.multigraded);
      }
    }
  }
}

TEST_CASE("parallel Betti computation matches serial") {
  auto I = edge_ideal(cycle_graph(7));
  BettiOptions serial, parallel;
  parallel.jobs = 3;
  CHECK(betti_table(I, serial).multigraded == betti_table(I, parallel).multigraded);
}

TEST_CASE("characteristic dependence is reported") {
  auto I = rp2_ideal();
  REQUIRE(I.size() == 10);
  auto two = betti_table(I, FieldSpec::prime(2));
  auto big = betti_table(I, FieldSpec::prime(32003));
  auto qq = betti_table(I, FieldSpec::rationals());
  CHECK(two.multigraded != big.multigraded);
  CHECK(big.multigraded == qq.multigraded);
  CHECK_FALSE(two.warnings.empty());
  CHECK(big.warnings.empty());
  CHECK(two.pd() == 4);
  CHECK(big.pd() == 3);
}

TEST_CASE("projective dimension, Cohen-Macaulayness and bounds") {
  auto bip = edge_ideal(graph_fixture("bipartite-cm"));
  CHECK(is_cohen_macaulay(bip));
  auto gm = phan_ideal(graphic_matroid_lattice());
  CHECK(projective_dimension(gm) == 3);
  CHECK(ideal_height(gm) == 2);
  CHECK_FALSE(is_cohen_macaulay(gm));
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto rng = instance_rng(23, i);
    auto I = random_ideal(rng, {5, 6, 3});
    auto L = lcm_lattice(I);
    auto pd = projective_dimension(I);
    CHECK(static_cast<int>(pd) <= height(L));
    CHECK(pd <= mi_width(L));
    CHECK(pd <= I.size());
  }
}

TEST_CASE("Taylor minimality and the Boolean equivalence") {
  auto boolean = ideal("x1^2*x2\nx2^2*x3\nx3^2\n");
  CHECK(has_unique_variable_powers(boolean));
  CHECK(taylor_is_minimal(boolean).is_minimal);
  CHECK(boolean_equivalence_report(boolean).consistent());
  CHECK(boolean_equivalence_report(boolean).lattice_boolean);

  auto path = ideal("x1*x2\nx2*x3\nx3*x4\n");
  auto r = taylor_is_minimal(path);
  CHECK_FALSE(r.is_minimal);
  REQUIRE_FALSE(r.subset.empty());
  // The witness: dropping the omitted generator keeps the lcm.
  Monomial with(path.nvars()), without(path.nvars());
  for (auto k : r.subset) {
    with = lcm(with, path.generators()[k]);
    if (k != r.omitted) without = lcm(without, path.generators()[k]);
  }
  CHECK(with == without);
  CHECK_FALSE(has_unique_variable_powers(path));
  auto b = boolean_equivalence_report(path);
  CHECK(b.consistent());
  CHECK_FALSE(b.pd_equals_generator_count);

  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = instance_rng(31, i);
    auto I = random_ideal(rng, {6, 6, 4});
    CAPTURE(I.to_string());
    auto rep = boolean_equivalence_report(I, FieldSpec::default_field(), false);
    REQUIRE(rep.consistent());
    REQUIRE(rep.lattice_boolean == oracle::boolean(oracle::Poset(lcm_lattice(I))));
  }
}

TEST_CASE("pd versus lattice height contracts") {
  auto p5 = pd_vs_height_report(edge_ideal(path_graph(5)));
  CHECK(p5.pd == 3);
  CHECK(p5.lattice_height == 4);
  CHECK_FALSE(p5.equal);
  CHECK(p5.lattice_strongly_complemented);
  CHECK(p5.violations().empty());

  auto fano = pd_vs_height_report(phan_ideal(fano_lattice()));
  CHECK(fano.equal);
  CHECK(fano.lattice_geometric);

  PdHeightReport broken;
  broken.pd = 2;
  broken.lattice_height = 3;
  broken.lattice_geometric = true;
  CHECK(broken.violations().size() == 1);
}

TEST_CASE("purity") {
  CHECK(is_pure(edge_ideal(path_graph(4))).degrees == std::vector<std::uint64_t>{0, 2, 3});
  CHECK_FALSE(is_pure(ideal("x1\nx2*x3\n")).pure);
  CHECK(is_pure(ideal("x1\nx2\nx3\n")).degrees == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("Taylor oracle limits") {
  CHECK_THROWS_AS(taylor_betti_table(ideal("x1\n"), FieldSpec::rationals()), Error);
  std::vector<Monomial> many;
  for (std::size_t k = 0; k < kTaylorMaxGenerators + 1; ++k) many.push_back(Monomial::from_support(17, {k}));
  CHECK_THROWS_AS(taylor_betti_table(minimalize(many), FieldSpec::prime(2)), Error);
}
