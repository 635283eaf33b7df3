#include "doctest.h"

#include "lcmlat/constructions.hpp"
#include "lcmlat/error.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/verify.hpp"

using namespace lcmlat;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Connected labeled graphs via c_n = 2^C(n,2) - sum_k C(n-1,k-1) c_k 2^C(n-k,2).
std::vector<std::uint64_t> connected_counts(std::size_t max_n) {
  std::vector<std::uint64_t> c(max_n + 1, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::uint64_t total = std::uint64_t{1} << binom(n, 2);
    for (std::size_t k = 1; k < n; ++k) total -= binom(n - 1, k - 1) * c[k] * (std::uint64_t{1} << binom(n - k, 2));
    c[n] = total;
  }
  return c;
}

}  // namespace

TEST_CASE("ideal text format") {
  auto I = parse_ideal_text("# comment\nx1*x2^2\n\nx3 , x2*x4\n");
  CHECK(I.nvars() == 4);
  CHECK(I.size() == 3);
  CHECK(ideal_to_text(I) == "x1*x2^2\nx3\nx2*x4\n");
  CHECK(parse_ideal_text(ideal_to_text(I)) == I);
  CHECK(code_of([] { parse_ideal_text("x1\n1\n"); }) == ErrorCode::UnitGenerator);
  CHECK(code_of([] { parse_ideal_text("# nothing\n"); }) == ErrorCode::EmptyGeneratorSet);
  try {
    parse_ideal_text("x1\nx2*y3\n", "bad.ideal");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("bad.ideal:2") != std::string::npos);
  }
}

TEST_CASE("JSON round trips") {
  auto I = parse_ideal_text("x1^2*x3\nx2*x3\n");
  CHECK(ideal_from_json(ideal_to_json(I)) == I);

  auto L = lcm_lattice(I);
  auto back = lattice_from_json(lattice_to_json(L));
  CHECK(back.cover_pairs() == L.cover_pairs());
  CHECK(back.labels() == L.labels());
  auto F = lattice_from_json(json::parse(lattice_to_json(fano_lattice()).dump()));
  CHECK(F.cover_pairs() == fano_lattice().cover_pairs());

  auto G = graph_fixture("fig6");
  CHECK(graph_from_json(graph_to_json(G)) == G);

  CHECK(code_of([] { lattice_from_json(json::parse(R"({"n": 3, "covers": [[0, 1], [0, 2]]})")); }) ==
        ErrorCode::NotBounded);
  CHECK(code_of([] { parse_input("{\"n\": 2, \"edges\": [[0, 0]]}"); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { parse_input("{\"n\": 2, \"edges\": "); }) == ErrorCode::ParseError);
}

TEST_CASE("input dispatch and conversions") {
  auto g = parse_input(graph_to_json(path_graph(3)).dump());
  CHECK(std::holds_alternative<Graph>(g));
  CHECK(as_ideal(g) == parse_ideal_text("x1*x2\nx2*x3\n"));
  CHECK(as_lattice(g).size() == 4);

  auto l = parse_input(lattice_to_json(fano_lattice()).dump());
  CHECK(std::holds_alternative<FiniteLattice>(l));
  CHECK(as_ideal(l) == phan_ideal(fano_lattice()));
  CHECK(code_of([&] { as_graph(l); }) == ErrorCode::BadParameter);

  auto i = parse_input("x1*x2\nx2*x3\n");
  CHECK(std::holds_alternative<MonomialIdeal>(i));
  auto nested = parse_input(json{{"lattice", lattice_to_json(mn_lattice(3))}}.dump());
  CHECK(as_lattice(nested).size() == 5);
}

TEST_CASE("Betti table rendering") {
  auto t = betti_table(phan_ideal(fano_lattice()));
  auto text = betti_to_text(t);
  CHECK(text.find("3 | - 7  - -") != std::string::npos);
  CHECK(text.find("4 | - - 14 8") != std::string::npos);
  auto j = betti_to_json(t);
  CHECK(j["pd"] == 3);
  std::size_t total = 0;
  for (const auto& e : j["entries"]) total += e["rank"].get<std::size_t>();
  CHECK(total == 1 + 7 + 14 + 8);
}

TEST_CASE("graph enumeration counts") {
  auto expected = connected_counts(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(connected_labeled_graphs(n).size() == expected[n]);
  }
  const std::vector<std::size_t> classes = {0, 1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(connected_graph_classes(n).size() == classes[n]);
  CHECK(code_of([] { connected_labeled_graphs(8); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("random ideals are seeded and bounded") {
  RandomIdealSpec spec{6, 6, 4};
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto a = instance_rng(42, i), b = instance_rng(42, i);
    auto I = random_ideal(a, spec);
    CHECK(I == random_ideal(b, spec));
    CHECK(I.nvars() >= 2);
    CHECK(I.nvars() <= 6);
    CHECK(I.size() >= 1);
    CHECK(I.size() <= 6);
    for (const auto& g : I.generators()) {
      CHECK(g.degree() >= 1);
      CHECK(g.degree() <= 4);
    }
  }
  auto x = instance_rng(1, 0), y = instance_rng(2, 0);
  CHECK(x() != y());
}

TEST_CASE("theorem catalog and verification results") {
  CHECK(theorem_catalog().size() == 18);
  for (const auto& t : theorem_catalog()) {
    CHECK(is_theorem_id(t.id));
    CHECK_FALSE(t.statement.empty());
  }
  CHECK(code_of([] { verify("no-such-theorem"); }) == ErrorCode::BadTheoremId);
  VerifyOptions big;
  big.max_n = 9;
  CHECK(code_of([&] { verify("graded-graph", big); }) == ErrorCode::ResourceLimit);

  VerifyOptions opt;
  opt.samples = 40;
  auto a = verify("pd-height-bound", opt);
  opt.jobs = 2;
  auto b = verify("pd-height-bound", opt);
  CHECK(a.passed());
  CHECK(result_to_json(a).dump() == result_to_json(b).dump());
  CHECK(result_to_json(a)["verdict"] == "pass");

  VerifyOptions small;
  small.max_n = 5;
  auto lsm = verify("lsm", small);
  CHECK_FALSE(lsm.passed());
  CHECK(lsm.counterexamples.size() == 12);
  for (const auto& ce : lsm.counterexamples) {
    auto G = graph_from_json(json::parse(ce.instance));
    CHECK(G.edge_count() == 5);
    CHECK(ce.reproduce.find("lcmlat graph props") != std::string::npos);
  }
  CHECK(verify("graded-graph", small).passed());
}
