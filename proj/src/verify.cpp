#include "lcmlat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

#include "lcmlat/constructions.hpp"
#include "lcmlat/error.hpp"
#include "lcmlat/resolution.hpp"

namespace lcmlat {

// ---------------------------------------------------------------------------
// Instance generators

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealSpec& spec) {
  if (spec.max_vars < 2 || spec.max_gens < 1 || spec.max_degree < 1)
    throw Error(ErrorCode::BadParameter, "random ideal bounds too small");
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const auto nvars = pick(2, spec.max_vars);
  const auto q = pick(1, spec.max_gens);
  // All non-unit exponent vectors of total degree <= max_degree.
  std::vector<Monomial> pool;
  Monomial m(nvars);
  std::function<void(std::size_t, std::size_t)> build = [&](std::size_t v, std::size_t left) {
    if (v == nvars) {
      if (!m.is_one()) pool.push_back(m);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      m[v] = static_cast<Exponent>(e);
      build(v + 1, left - e);
    }
    m[v] = 0;
  };
  build(0, spec.max_degree);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < q; ++k) gens.push_back(pool[pick(0, pool.size() - 1)]);
  return minimalize(gens);
}

namespace {

Graph graph_from_mask(std::size_t n, std::uint64_t mask, const std::vector<std::pair<std::size_t, std::size_t>>& slots) {
  Graph g(n);
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (mask >> k & 1u) g.add_edge(slots[k].first, slots[k].second);
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_slots(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

/// Smallest edge mask over relabelings that sort vertices by degree.
std::uint64_t canonical_mask(const Graph& g, const std::vector<std::pair<std::size_t, std::size_t>>& slots) {
  const auto n = g.n();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) < g.degree(b); });
  std::vector<std::size_t> class_start;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || g.degree(order[i]) != g.degree(order[i - 1])) class_start.push_back(i);
  class_start.push_back(n);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> label(n);
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c + 1 == class_start.size()) {
      for (std::size_t i = 0; i < n; ++i) label[order[i]] = i;
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        auto [a, b] = slots[k];
        if (!g.adjacent(a, b)) continue;
        auto x = std::min(label[a], label[b]), y = std::max(label[a], label[b]);
        mask |= std::uint64_t{1} << (x * (2 * n - x - 1) / 2 + (y - x - 1));
      }
      best = std::min(best, mask);
      return;
    }
    auto lo = order.begin() + static_cast<std::ptrdiff_t>(class_start[c]);
    auto hi = order.begin() + static_cast<std::ptrdiff_t>(class_start[c + 1]);
    std::sort(lo, hi);
    do {
      permute(c + 1);
    } while (std::next_permutation(lo, hi));
  };
  permute(0);
  return best;
}

}  // namespace

std::vector<Graph> connected_labeled_graphs(std::size_t n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::ResourceLimit, "labeled enumeration supports 1 <= n <= 7");
  auto slots = edge_slots(n);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    auto g = graph_from_mask(n, mask, slots);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graph_classes(std::size_t n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::ResourceLimit, "class enumeration supports 1 <= n <= 7");
  auto slots = edge_slots(n);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    auto g = graph_from_mask(n, mask, slots);
    if (!g.is_connected()) continue;
    auto c = canonical_mask(g, slots);
    if (seen.insert(c).second) out.push_back(graph_from_mask(n, c, slots));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<TheoremCase>& theorem_catalog() {
  static const std::vector<TheoremCase> catalog = {
      {"graded-graph", "connected G: L graded <=> G gap-free <=> complement C4-free <=> I(G) linearly presented; "
                       "graded => rank(m) = deg(m) - 1"},
      {"uss-modular", "connected G: L modular <=> geometric <=> upper semimodular <=> no disjoint edges <=> G is C3 "
                      "or a star"},
      {"boolean-edge", "connected G: L Boolean <=> L distributive <=> G a star"},
      {"supersolvable", "connected G: L supersolvable <=> some edge meets every other edge"},
      {"lsm", "connected G: L lower semimodular <=> gap-, C4- and diamond-free <=> a clique with pendant leaves"},
      {"coatomic", "connected G: L coatomic <=> G a star or min degree >= 2"},
      {"complemented", "connected G: L complemented <=> independent-set domination for every union of edges"},
      {"gray-areas", "connected G: supersolvable+coatomic => complemented; lsm+coatomic => complemented; all three "
                     "=> modular"},
      {"special-families", "P_n graded iff n <= 4, complemented iff n != 1 mod 3; C_n graded iff n <= 5, always "
                           "complemented; K_n graded, complemented, pd = rank = n - 1"},
      {"pd-height-bound", "pd(S/I) <= height(L_I) and pd(S/I) <= width of meet-irreducibles"},
      {"boolean-equivalence", "L_I Boolean <=> unique variable powers <=> Taylor resolution minimal <=> pd = mu(I)"},
      {"phan-roundtrip", "L atomic: LCM lattice of the Phan ideal of L is isomorphic to L"},
      {"modular-cm", "minimal ideal with modular LCM lattice is Cohen-Macaulay"},
      {"geometric-pd", "L_I geometric, or lower semimodular and coatomic => pd(S/I) = rank(L_I)"},
      {"strongly-complemented-necessary", "pd(S/I) = height(L_I) => L_I strongly complemented"},
      {"product-lemma", "P(L1 x L2) <=> P(L1) and P(L2) for the listed properties; L_I(G1 + G2) = L1 x L2"},
      {"polarization-invariance", "LCM lattice of I is isomorphic to that of its polarization"},
      {"betti-oracle", "GPW Betti numbers equal Taylor-strand Betti numbers over char 2 and 32003"},
  };
  return catalog;
}

bool is_theorem_id(std::string_view id) {
  const auto& c = theorem_catalog();
  return std::any_of(c.begin(), c.end(), [&](const TheoremCase& t) { return t.id == id; });
}

// ---------------------------------------------------------------------------
// Runner

namespace {

using Findings = std::vector<Counterexample>;

/// Runs f(i) for i < count on `jobs` workers; findings are merged in index order.
Findings run_parallel(std::size_t count, unsigned jobs, const std::function<Findings(std::size_t)>& f) {
  std::vector<Findings> per(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) per[i] = f(i);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  Findings out;
  for (auto& p : per) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Counterexample graph_finding(const Graph& g, std::string detail) {
  auto j = graph_to_json(g).dump();
  return {j, std::move(detail), "echo " + quote(j) + " | lcmlat graph props -"};
}

Counterexample ideal_finding(const MonomialIdeal& I, std::string detail, const std::string& subcommand) {
  auto j = ideal_to_json(I).dump();
  return {j, std::move(detail), "echo " + quote(j) + " | lcmlat ideal " + subcommand + " -"};
}

Counterexample lattice_finding(const std::string& name, const FiniteLattice& L, std::string detail,
                               const std::string& subcommand) {
  auto j = lattice_to_json(L).dump();
  return {name + " " + j, std::move(detail), "echo " + quote(j) + " | lcmlat lattice " + subcommand + " -"};
}

struct Ctx {
  const VerifyOptions& opt;
  std::size_t checked = 0;
};

/// Betti table over the chosen field, cross-checked against char 2 and QQ.
BettiTable checked_betti(const MonomialIdeal& I, FieldSpec field, Findings& out, const std::string& subcommand) {
  BettiOptions o;
  o.field = field;
  auto t = betti_table(I, o);
  for (const auto& w : t.warnings) out.push_back(ideal_finding(I, "characteristic dependence: " + w, subcommand));
  if (field.characteristic != 2) {
    o.field = FieldSpec::prime(2);
    o.confirm_char0 = false;
    auto t2 = betti_table(I, o);
    if (t2.multigraded != t.multigraded)
      out.push_back(ideal_finding(I, "Betti numbers differ between " + field.name() + " and ZZ/2", "betti --char 2"));
  }
  return t;
}

std::vector<Graph> graph_pool(const VerifyOptions& opt) {
  if (opt.max_n > 7) throw Error(ErrorCode::ResourceLimit, "graph enumeration is limited to 7 vertices");
  std::vector<Graph> graphs;
  for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 6); ++n) {
    auto g = connected_labeled_graphs(n);
    graphs.insert(graphs.end(), g.begin(), g.end());
  }
  if (opt.include_n7 || opt.max_n == 7) {
    auto g = connected_graph_classes(7);
    graphs.insert(graphs.end(), g.begin(), g.end());
  }
  return graphs;
}

VerificationResult graph_case(std::string_view id, const VerifyOptions& opt, const std::vector<std::string>& prefixes,
                              bool gray) {
  auto graphs = graph_pool(opt);
  VerificationResult r;
  r.instances_checked = graphs.size();
  r.counterexamples = run_parallel(graphs.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    auto rep = graph_lattice_report(graphs[i], false);
    std::vector<TheoremCheck> checks = gray ? gray_area_checks(rep.lattice) : rep.checks;
    for (const auto& c : checks) {
      bool selected = gray || std::any_of(prefixes.begin(), prefixes.end(),
                                          [&](const std::string& p) { return c.name.rfind(p, 0) == 0; });
      if (selected && !c.agrees())
        f.push_back(graph_finding(graphs[i], c.name + ": lattice " + (c.lattice_side ? "true" : "false") +
                                                 ", graph " + (c.graph_side ? "true" : "false")));
    }
    return f;
  });
  (void)id;
  return r;
}

std::vector<MonomialIdeal> random_ideals(const VerifyOptions& opt, std::size_t default_count,
                                         const RandomIdealSpec& spec) {
  const auto count = opt.samples ? opt.samples : default_count;
  if (count > 100000) throw Error(ErrorCode::ResourceLimit, "sample count too large");
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = instance_rng(opt.seed, i);
    out.push_back(random_ideal(rng, spec));
  }
  return out;
}

std::vector<MonomialIdeal> fixture_ideals() {
  std::vector<MonomialIdeal> out{phan_ideal(fano_lattice()), phan_ideal(graphic_matroid_lattice())};
  for (const auto& id : graph_fixture_ids()) {
    auto g = graph_fixture(id);
    if (g.n() <= 10) out.push_back(edge_ideal(g));
  }
  out.push_back(edge_ideal(path_graph(5)));
  return out;
}

struct NamedLattice {
  std::string name;
  FiniteLattice lattice;
};

FiniteLattice pentagon() { return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

std::vector<NamedLattice> constructed_lattices() {
  std::vector<NamedLattice> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"M" + std::to_string(n), mn_lattice(n)});
  for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 3}})
    out.push_back({"subspace(" + std::to_string(q) + "," + std::to_string(r) + ")", subspace_lattice(q, r)});
  out.push_back({"fano", fano_lattice()});
  out.push_back({"graphic-matroid", graphic_matroid_lattice()});
  for (const auto& id : graph_fixture_ids()) {
    auto g = graph_fixture(id);
    if (g.n() <= 10) out.push_back({id, graph_lcm_lattice(g)});
  }
  out.push_back({"M3xsubspace(2,2)", product(mn_lattice(3), subspace_lattice(2, 2))});
  out.push_back({"subspace(2,2)xsubspace(3,2)", product(subspace_lattice(2, 2), subspace_lattice(3, 2))});
  return out;
}

// Individual cases ----------------------------------------------------------

VerificationResult case_special_families(const VerifyOptions& opt) {
  VerificationResult r;
  Findings& f = r.counterexamples;
  auto expect = [&](const Graph& g, const std::string& what, bool got, bool want) {
    ++r.instances_checked;
    if (got != want)
      f.push_back(graph_finding(g, what + ": got " + (got ? "true" : "false") + ", expected " + (want ? "true" : "false")));
  };
  for (std::size_t n = 2; n <= 8; ++n) {
    auto g = path_graph(n);
    expect(g, "P" + std::to_string(n) + " graded", is_graded(graph_lcm_lattice(g)).holds, n <= 4);
  }
  for (std::size_t n = 2; n <= 9; ++n) {
    auto g = path_graph(n);
    expect(g, "P" + std::to_string(n) + " complemented", is_complemented(graph_lcm_lattice(g)).holds, n % 3 != 1);
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    auto g = cycle_graph(n);
    auto L = graph_lcm_lattice(g);
    expect(g, "C" + std::to_string(n) + " graded", is_graded(L).holds, n <= 5);
    expect(g, "C" + std::to_string(n) + " complemented", is_complemented(L).holds, true);
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    auto g = complete_graph(n);
    auto L = graph_lcm_lattice(g);
    const auto name = "K" + std::to_string(n);
    expect(g, name + " graded", is_graded(L).holds, true);
    expect(g, name + " complemented", is_complemented(L).holds, true);
    auto t = checked_betti(edge_ideal(g), opt.field, f, "betti");
    expect(g, name + " pd = n - 1", t.pd() == n - 1, true);
    expect(g, name + " rank = n - 1", height(L) == static_cast<int>(n - 1), true);
  }
  return r;
}

VerificationResult case_pd_height(const VerifyOptions& opt) {
  auto ideals = random_ideals(opt, 200, {5, 5, 3});
  for (auto& I : fixture_ideals()) ideals.push_back(I);
  VerificationResult r;
  r.instances_checked = ideals.size();
  r.counterexamples = run_parallel(ideals.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& I = ideals[i];
    auto L = lcm_lattice(I);
    auto pd = checked_betti(I, opt.field, f, "betti").pd();
    if (static_cast<int>(pd) > height(L))
      f.push_back(ideal_finding(I, "pd " + std::to_string(pd) + " exceeds lattice height", "pd"));
    if (pd > mi_width(L)) f.push_back(ideal_finding(I, "pd " + std::to_string(pd) + " exceeds mi width", "pd"));
    return f;
  });
  return r;
}

VerificationResult case_boolean_equivalence(const VerifyOptions& opt) {
  auto ideals = random_ideals(opt, 500, {6, 6, 4});
  VerificationResult r;
  r.instances_checked = ideals.size();
  r.counterexamples = run_parallel(ideals.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& I = ideals[i];
    auto pd = checked_betti(I, opt.field, f, "betti").pd();
    BooleanEquivalence b;
    b.lattice_boolean = is_boolean(lcm_lattice(I)).holds;
    b.unique_variable_powers = has_unique_variable_powers(I);
    b.taylor_minimal = taylor_is_minimal(I).is_minimal;
    b.pd_equals_generator_count = pd == I.size();
    if (!b.consistent())
      f.push_back(ideal_finding(I,
                                std::string("boolean ") + (b.lattice_boolean ? "1" : "0") + ", unique powers " +
                                    (b.unique_variable_powers ? "1" : "0") + ", taylor minimal " +
                                    (b.taylor_minimal ? "1" : "0") + ", pd = mu " +
                                    (b.pd_equals_generator_count ? "1" : "0"),
                                "taylor-minimal"));
    return f;
  });
  return r;
}

VerificationResult case_phan_roundtrip(const VerifyOptions& opt) {
  std::vector<NamedLattice> pool;
  for (auto& n : constructed_lattices()) pool.push_back(std::move(n));
  auto ideals = random_ideals(opt, 200, {6, 6, 4});
  for (std::size_t i = 0; i < ideals.size(); ++i)
    pool.push_back({"random#" + std::to_string(i), lcm_lattice(ideals[i])});
  VerificationResult r;
  r.instances_checked = pool.size();
  r.counterexamples = run_parallel(pool.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& [name, L] = pool[i];
    if (!is_atomic(L).holds) return f;
    auto P = phan_ideal(L);
    if (!is_isomorphic(lcm_lattice(P), L)) f.push_back(lattice_finding(name, L, "round trip not isomorphic", "phan"));
    if (!is_minimal_ideal(P)) f.push_back(lattice_finding(name, L, "Phan ideal not recognized as minimal", "phan"));
    return f;
  });
  return r;
}

VerificationResult case_modular_cm(const VerifyOptions& opt) {
  std::vector<NamedLattice> pool;
  for (std::size_t n = 3; n <= 8; ++n) pool.push_back({"M" + std::to_string(n), mn_lattice(n)});
  for (auto [q, rr] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {5, 2}, {2, 3}})
    pool.push_back({"subspace(" + std::to_string(q) + "," + std::to_string(rr) + ")", subspace_lattice(q, rr)});
  pool.push_back({"M3xM4", product(mn_lattice(3), mn_lattice(4))});
  pool.push_back({"subspace(2,2)xsubspace(3,2)", product(subspace_lattice(2, 2), subspace_lattice(3, 2))});
  VerificationResult r;
  r.instances_checked = pool.size();
  r.counterexamples = run_parallel(pool.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& [name, L] = pool[i];
    if (!is_modular(L).holds) f.push_back(lattice_finding(name, L, "fixture not modular", "check"));
    auto I = phan_ideal(L);
    auto pd = checked_betti(I, opt.field, f, "betti").pd();
    auto ht = ideal_height(I);
    if (pd != ht)
      f.push_back(lattice_finding(name, L, "not Cohen-Macaulay: pd " + std::to_string(pd) + ", height " +
                                               std::to_string(ht), "phan"));
    return f;
  });
  return r;
}

VerificationResult pd_height_contracts(const VerifyOptions& opt, bool strongly) {
  auto ideals = random_ideals(opt, 200, {5, 5, 3});
  for (auto& I : fixture_ideals()) ideals.push_back(I);
  for (const auto& [name, L] : constructed_lattices())
    if (L.size() > 1 && is_atomic(L).holds) ideals.push_back(phan_ideal(L));
  if (strongly)
    for (std::size_t n = 2; n <= 5; ++n)
      for (const auto& g : connected_labeled_graphs(n)) ideals.push_back(edge_ideal(g));
  VerificationResult r;
  r.instances_checked = ideals.size();
  r.counterexamples = run_parallel(ideals.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& I = ideals[i];
    auto L = lcm_lattice(I);
    auto pd = checked_betti(I, opt.field, f, "betti").pd();
    const int h = height(L);
    const bool equal = static_cast<int>(pd) == h;
    if (strongly) {
      if (equal && !is_strongly_complemented(L).holds)
        f.push_back(ideal_finding(I, "pd = height but not strongly complemented", "pd"));
    } else {
      if (static_cast<int>(pd) > h) f.push_back(ideal_finding(I, "pd exceeds lattice height", "pd"));
      if (!equal && is_geometric(L).holds) f.push_back(ideal_finding(I, "geometric with pd below rank", "pd"));
      if (!equal && is_lower_semimodular(L).holds && is_coatomic(L).holds)
        f.push_back(ideal_finding(I, "lsm and coatomic with pd below rank", "pd"));
    }
    return f;
  });
  return r;
}

VerificationResult case_product_lemma(const VerifyOptions& opt) {
  std::vector<NamedLattice> pool = {
      {"chain2", mn_lattice(1)},
      {"B2", lcm_lattice(edge_ideal(star_graph(2)))},
      {"M3", mn_lattice(3)},
      {"pentagon", pentagon()},
      {"P5", graph_lcm_lattice(path_graph(5))},
      {"fig6", graph_lcm_lattice(graph_fixture("fig6"))},
      {"graphic-matroid", graphic_matroid_lattice()},
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a; b < pool.size() && pairs.size() < 20; ++b) pairs.emplace_back(a, b);
  constexpr std::array<Property, 11> props = {
      Property::boolean,  Property::distributive,      Property::graded,
      Property::modular,  Property::geometric,         Property::upper_semimodular,
      Property::lower_semimodular, Property::atomic,   Property::coatomic,
      Property::complemented, Property::supersolvable,
  };
  const std::vector<std::pair<Graph, Graph>> graph_pairs = {
      {path_graph(2), path_graph(3)}, {path_graph(3), cycle_graph(3)}, {complete_graph(3), path_graph(4)},
      {star_graph(3), path_graph(2)}};

  VerificationResult r;
  r.instances_checked = pairs.size() + graph_pairs.size();
  auto lattice_findings = run_parallel(pairs.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& A = pool[pairs[i].first];
    const auto& B = pool[pairs[i].second];
    auto P = product(A.lattice, B.lattice);
    for (auto p : props) {
      bool lhs = check_property(P, p).holds;
      bool rhs = check_property(A.lattice, p).holds && check_property(B.lattice, p).holds;
      if (lhs != rhs)
        f.push_back(lattice_finding(A.name + "x" + B.name, P, std::string(property_name(p)) + " not multiplicative",
                                    "check"));
    }
    // Multiplication of fixtures commutes up to isomorphism.
    if (!is_isomorphic(P, product(B.lattice, A.lattice)))
      f.push_back(lattice_finding(A.name + "x" + B.name, P, "product not commutative up to isomorphism", "check"));
    return f;
  });
  r.counterexamples = std::move(lattice_findings);
  for (const auto& [g, h] : graph_pairs) {
    auto u = disjoint_union(g, h);
    if (!is_isomorphic(graph_lcm_lattice(u), product(graph_lcm_lattice(g), graph_lcm_lattice(h))))
      r.counterexamples.push_back(graph_finding(u, "disjoint union lattice is not the product"));
  }
  return r;
}

VerificationResult case_polarization(const VerifyOptions& opt) {
  auto ideals = random_ideals(opt, 200, {4, 4, 4});
  for (auto& I : fixture_ideals()) ideals.push_back(I);
  VerificationResult r;
  r.instances_checked = ideals.size();
  r.counterexamples = run_parallel(ideals.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& I = ideals[i];
    auto P = polarize(I);
    if (!P.is_squarefree()) f.push_back(ideal_finding(I, "polarization not squarefree", "polarize"));
    if (!is_isomorphic(lcm_lattice(I), lcm_lattice(P)))
      f.push_back(ideal_finding(I, "polarization changes the LCM lattice", "polarize"));
    return f;
  });
  return r;
}

VerificationResult case_betti_oracle(const VerifyOptions& opt) {
  auto ideals = random_ideals(opt, 200, {6, 8, 4});
  for (auto& I : fixture_ideals())
    if (I.size() <= kTaylorMaxGenerators) ideals.push_back(I);
  VerificationResult r;
  r.instances_checked = ideals.size();
  r.counterexamples = run_parallel(ideals.size(), opt.jobs, [&](std::size_t i) {
    Findings f;
    const auto& I = ideals[i];
    std::vector<FieldSpec> fields{FieldSpec::prime(2), FieldSpec::prime(32003)};
    if (!opt.field.is_rational() && opt.field.characteristic != 2 && opt.field.characteristic != 32003)
      fields.push_back(opt.field);
    for (auto field : fields) {
      BettiOptions o;
      o.field = field;
      o.confirm_char0 = false;
      if (betti_table(I, o).multigraded != taylor_betti_table(I, field).multigraded)
        f.push_back(ideal_finding(I, "GPW and Taylor Betti numbers differ over " + field.name(),
                                  "betti --multigraded --char " + std::to_string(field.characteristic)));
    }
    return f;
  });
  return r;
}

}  // namespace

VerificationResult verify(std::string_view id, const VerifyOptions& opt) {
  if (!is_theorem_id(id)) throw Error(ErrorCode::BadTheoremId, "unknown theorem id '" + std::string(id) + "'");
  validate(opt.field);
  const auto start = std::chrono::steady_clock::now();
  VerificationResult r;
  if (id == "graded-graph") r = graph_case(id, opt, {"graded"}, false);
  else if (id == "uss-modular") r = graph_case(id, opt, {"modular", "geometric", "usm"}, false);
  else if (id == "boolean-edge") r = graph_case(id, opt, {"boolean", "distributive"}, false);
  else if (id == "supersolvable") r = graph_case(id, opt, {"supersolvable"}, false);
  else if (id == "lsm") r = graph_case(id, opt, {"lsm"}, false);
  else if (id == "coatomic") r = graph_case(id, opt, {"coatomic"}, false);
  else if (id == "complemented") r = graph_case(id, opt, {"complemented"}, false);
  else if (id == "gray-areas") r = graph_case(id, opt, {}, true);
  else if (id == "special-families") r = case_special_families(opt);
  else if (id == "pd-height-bound") r = case_pd_height(opt);
  else if (id == "boolean-equivalence") r = case_boolean_equivalence(opt);
  else if (id == "phan-roundtrip") r = case_phan_roundtrip(opt);
  else if (id == "modular-cm") r = case_modular_cm(opt);
  else if (id == "geometric-pd") r = pd_height_contracts(opt, false);
  else if (id == "strongly-complemented-necessary") r = pd_height_contracts(opt, true);
  else if (id == "product-lemma") r = case_product_lemma(opt);
  else if (id == "polarization-invariance") r = case_polarization(opt);
  else if (id == "betti-oracle") r = case_betti_oracle(opt);
  r.id = std::string(id);
  r.seed = opt.seed;
  r.field = opt.field.name();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json result_to_json(const VerificationResult& r) {
  json ces = json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"instance", c.instance}, {"detail", c.detail}, {"reproduce", c.reproduce}});
  return json{{"id", r.id},
              {"verdict", r.passed() ? "pass" : "fail"},
              {"instances_checked", r.instances_checked},
              {"seed", r.seed},
              {"field", r.field},
              {"counterexamples", std::move(ces)}};
}

}  // namespace lcmlat
