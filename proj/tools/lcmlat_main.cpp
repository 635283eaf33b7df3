#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "lcmlat/constructions.hpp"
#include "lcmlat/error.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/resolution.hpp"
#include "lcmlat/verify.hpp"

using namespace lcmlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO); }

std::string paint(const std::string& s, const char* code) {
  return use_color() ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string verdict_word(bool pass) { return pass ? paint("PASS", "32") : paint("FAIL", "31"); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join_numbers(const auto& xs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
  return os.str();
}

FieldSpec field_from(std::uint32_t p) {
  auto f = FieldSpec{p};
  validate(f);
  return f;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
  std::string path = "-";
  std::uint32_t characteristic = 32003;
  bool as_json = false;
};

// ideal ---------------------------------------------------------------------

int ideal_command(const std::string& action, const Common& c, bool multigraded) {
  const auto I = as_ideal(load_input(c.path));
  const auto field = field_from(c.characteristic);
  if (action == "lcm") {
    auto L = lcm_lattice(I);
    auto rep = property_report(L);
    if (c.as_json) {
      print_json(json{{"lattice", lattice_to_json(L)}, {"properties", property_report_to_json(rep)}});
    } else {
      std::cout << "elements " << L.size() << ", height " << height(L) << "\n" << property_report_to_text(rep);
    }
  } else if (action == "betti") {
    BettiOptions o;
    o.field = field;
    auto t = betti_table(I, o);
    if (c.as_json) {
      auto j = betti_to_json(t);
      if (!multigraded) j.erase("entries"), j["graded"] = json::array();
      if (!multigraded)
        for (const auto& [key, rank] : t.graded()) j["graded"].push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
      print_json(j);
    } else {
      std::cout << betti_to_text(t);
      if (multigraded)
        for (const auto& e : t.multigraded) std::cout << "beta_" << e.i << "," << e.m.to_string() << " = " << e.rank << "\n";
      for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
    }
  } else if (action == "pd") {
    auto pd = projective_dimension(I, field);
    if (c.as_json) print_json({{"pd", pd}, {"field", field.name()}});
    else std::cout << pd << "\n";
  } else if (action == "height") {
    auto h = ideal_height(I);
    if (c.as_json) print_json({{"height", h}});
    else std::cout << h << "\n";
  } else if (action == "cm") {
    auto pd = projective_dimension(I, field);
    auto h = ideal_height(I);
    if (c.as_json) print_json({{"cohen_macaulay", pd == h}, {"pd", pd}, {"height", h}, {"field", field.name()}});
    else std::cout << yes_no(pd == h) << " (pd " << pd << ", height " << h << ")\n";
  } else if (action == "taylor-minimal") {
    auto r = taylor_is_minimal(I);
    if (c.as_json) {
      json j{{"taylor_minimal", r.is_minimal}};
      if (!r.is_minimal) j["subset"] = r.subset, j["omitted"] = r.omitted;
      print_json(j);
    } else {
      std::cout << yes_no(r.is_minimal);
      if (!r.is_minimal) std::cout << " (subset {" << join_numbers(r.subset) << "}, omitted " << r.omitted << ")";
      std::cout << "\n";
    }
  } else if (action == "pure") {
    auto r = is_pure(I, field);
    if (c.as_json) print_json({{"pure", r.pure}, {"degrees", r.degrees}});
    else std::cout << yes_no(r.pure) << (r.pure ? " (" + join_numbers(r.degrees) + ")" : "") << "\n";
  } else if (action == "polarize") {
    auto P = polarize(I);
    if (c.as_json) print_json(ideal_to_json(P));
    else std::cout << ideal_to_text(P);
  } else if (action == "minimal") {
    auto m = is_minimal_ideal(I);
    if (c.as_json) print_json({{"minimal", m}});
    else std::cout << yes_no(m) << "\n";
  }
  return kExitOk;
}

// lattice -------------------------------------------------------------------

int lattice_command(const std::string& action, const Common& c, std::optional<Element> from,
                    std::optional<Element> to) {
  const auto L = as_lattice(load_input(c.path));
  if (action == "check") {
    auto rep = property_report(L);
    if (c.as_json) {
      print_json({{"elements", L.size()}, {"height", height(L)}, {"properties", property_report_to_json(rep)}});
    } else {
      std::cout << "elements " << L.size() << ", height " << height(L) << "\n" << property_report_to_text(rep);
    }
  } else if (action == "phan") {
    auto P = phan_ideal(L);
    if (c.as_json) print_json(ideal_to_json(P));
    else std::cout << ideal_to_text(P);
  } else if (action == "mobius") {
    auto lo = from.value_or(L.bottom());
    auto hi = to.value_or(L.top());
    if (lo >= L.size() || hi >= L.size()) throw Error(ErrorCode::BadParameter, "element out of range");
    auto mu = mobius(L, lo, hi);
    if (c.as_json) print_json({{"from", lo}, {"to", hi}, {"mobius", mu}});
    else std::cout << mu << "\n";
  }
  return kExitOk;
}

// graph ---------------------------------------------------------------------

Graph graph_input(const Common& c, const std::string& fixture) {
  return fixture.empty() ? as_graph(load_input(c.path)) : graph_fixture(fixture);
}

int graph_props(const Common& c, const std::string& fixture) {
  const auto G = graph_input(c, fixture);
  auto rep = graph_lattice_report(G, false);
  auto gray = gray_area_checks(rep.lattice);
  const bool ok = rep.disagreements().empty() &&
                  std::all_of(gray.begin(), gray.end(), [](const TheoremCheck& t) { return t.agrees(); });
  if (c.as_json) {
    json checks = json::array();
    for (const auto* list : {&rep.checks, &gray})
      for (const auto& t : *list)
        checks.push_back({{"name", t.name}, {"lattice", t.lattice_side}, {"graph", t.graph_side}, {"agrees", t.agrees()}});
    print_json({{"graph", graph_to_json(G)}, {"properties", property_report_to_json(rep.lattice)}, {"checks", checks}});
  } else {
    std::cout << property_report_to_text(rep.lattice) << "\n";
    std::size_t w = 0;
    for (const auto* list : {&rep.checks, &gray})
      for (const auto& t : *list) w = std::max(w, t.name.size());
    for (const auto* list : {&rep.checks, &gray})
      for (const auto& t : *list)
        std::cout << t.name << std::string(w + 2 - t.name.size(), ' ') << "lattice " << yes_no(t.lattice_side)
                  << (t.lattice_side ? "  " : " ") << " graph " << yes_no(t.graph_side)
                  << (t.graph_side ? "  " : " ") << " " << verdict_word(t.agrees()) << "\n";
  }
  return ok ? kExitOk : kExitCounterexample;
}

int graph_edge_ideal(const Common& c, const std::string& fixture) {
  auto I = edge_ideal(graph_input(c, fixture));
  if (c.as_json) print_json(ideal_to_json(I));
  else std::cout << ideal_to_text(I);
  return kExitOk;
}

// verify --------------------------------------------------------------------

void print_result_text(const VerificationResult& r) {
  std::cout << r.id << ": " << verdict_word(r.passed()) << "  (" << r.instances_checked << " instances, seed "
            << r.seed << ", " << r.field << ", " << std::fixed << std::setprecision(2) << r.elapsed_seconds
            << " s)\n";
  constexpr std::size_t kShown = 3;
  for (std::size_t k = 0; k < std::min(kShown, r.counterexamples.size()); ++k) {
    const auto& ce = r.counterexamples[k];
    std::cout << "  counterexample: " << ce.detail << "\n    instance:  " << ce.instance
              << "\n    reproduce: " << ce.reproduce << "\n";
  }
  if (r.counterexamples.size() > kShown)
    std::cout << "  ... " << r.counterexamples.size() - kShown << " more\n";
}

int verify_command(const std::string& id, bool all, const VerifyOptions& opt, bool as_json) {
  std::vector<std::string> ids;
  if (all) {
    for (const auto& t : theorem_catalog()) ids.push_back(t.id);
  } else {
    if (id.empty()) throw Error(ErrorCode::BadTheoremId, "give a theorem id or --all");
    ids.push_back(id);
  }
  for (const auto& i : ids)
    if (!is_theorem_id(i)) throw Error(ErrorCode::BadTheoremId, "unknown theorem id '" + i + "'");
  bool ok = true;
  json out = json::array();
  for (const auto& i : ids) {
    auto r = verify(i, opt);
    ok = ok && r.passed();
    if (as_json) out.push_back(result_to_json(r));
    else print_result_text(r), std::cout.flush();
  }
  if (as_json) print_json(all ? out : out[0]);
  return ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCM lattices, minimal ideals, Betti numbers and graph characterizations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common common;
  auto add_common = [&](CLI::App* sub, bool field) {
    sub->add_option("file", common.path, "Input file, '-' for stdin")->capture_default_str();
    sub->add_flag("--json", common.as_json, "Machine-readable output");
    if (field) sub->add_option("--char", common.characteristic, "Field characteristic, 0 for QQ")->capture_default_str();
  };

  int code = kExitOk;
  std::function<int()> action;

  // ideal
  auto* ideal = app.add_subcommand("ideal", "Monomial ideal commands")->require_subcommand(1);
  bool multigraded = false;
  const std::vector<std::pair<std::string, std::string>> ideal_cmds = {
      {"lcm", "LCM lattice"},
      {"betti", "Betti table of S/I"},
      {"pd", "Projective dimension of S/I"},
      {"height", "Height of I"},
      {"cm", "Cohen-Macaulay test"},
      {"taylor-minimal", "Whether the Taylor resolution is minimal"},
      {"pure", "Purity of the resolution"},
      {"polarize", "Squarefree polarization"},
      {"minimal", "Whether I is minimal for its LCM lattice"}};
  for (const auto& [n, help] : ideal_cmds) {
    auto* sub = ideal->add_subcommand(n, help);
    add_common(sub, n == "betti" || n == "pd" || n == "cm" || n == "pure");
    if (n == "betti") sub->add_flag("--multigraded", multigraded, "List multigraded Betti numbers");
    sub->callback([&, n] { action = [&, n] { return ideal_command(n, common, multigraded); }; });
  }
  ideal->description("Commands on monomial ideals; a graph input gives its edge ideal, a lattice its Phan ideal");

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Finite lattice commands")->require_subcommand(1);
  std::optional<Element> from, to;
  const std::vector<std::pair<std::string, std::string>> lattice_cmds = {
      {"check", "Structural properties with witnesses"}, {"phan", "Phan's minimal ideal"}, {"mobius", "Mobius function"}};
  for (const auto& [n, help] : lattice_cmds) {
    auto* sub = lattice->add_subcommand(n, help);
    add_common(sub, false);
    if (n == "mobius") {
      sub->add_option("--from", from, "Lower element (default bottom)");
      sub->add_option("--to", to, "Upper element (default top)");
    }
    sub->callback([&, n] { action = [&, n] { return lattice_command(n, common, from, to); }; });
  }

  // graph
  auto* graph = app.add_subcommand("graph", "Graph commands")->require_subcommand(1);
  std::string fixture;
  const std::vector<std::pair<std::string, std::string>> graph_cmds = {
      {"props", "Lattice properties against graph characterizations"}, {"edge-ideal", "Edge ideal I(G)"}};
  for (const auto& [n, help] : graph_cmds) {
    auto* sub = graph->add_subcommand(n, help);
    add_common(sub, false);
    sub->add_option("--fixture", fixture, "Built-in graph: " + join_numbers(graph_fixture_ids()));
    sub->callback([&, n] {
      action = [&, n] { return n == "props" ? graph_props(common, fixture) : graph_edge_ideal(common, fixture); };
    });
  }

  // make
  auto* make = app.add_subcommand("make", "Emit a constructed lattice or graph as JSON")->require_subcommand(1);
  std::uint32_t q = 2, r = 2;
  std::size_t n = 3;
  {
    auto* sub = make->add_subcommand("subspace", "Subspaces of F_q^r");
    sub->add_option("--q", q)->required();
    sub->add_option("--r", r)->required();
    sub->callback([&] { action = [&] { return print_json(lattice_to_json(subspace_lattice(q, r))), kExitOk; }; });
  }
  {
    auto* sub = make->add_subcommand("mn", "Rank-two lattice with n atoms");
    sub->add_option("--n", n)->required();
    sub->callback([&] { action = [&] { return print_json(lattice_to_json(mn_lattice(n))), kExitOk; }; });
  }
  make->add_subcommand("fano", "Subspace lattice of the Fano plane")->callback([&] {
    action = [&] { return print_json(lattice_to_json(fano_lattice())), kExitOk; };
  });
  make->add_subcommand("graphic-matroid", "Lattice of flats of the graphic matroid fixture")->callback([&] {
    action = [&] { return print_json(lattice_to_json(graphic_matroid_lattice())), kExitOk; };
  });
  for (const char* name : {"path", "cycle", "complete", "star"}) {
    const std::string g = name;
    auto* sub = make->add_subcommand(g, g == "star" ? "Star with n leaves" : g + " graph on n vertices");
    sub->add_option("--n", n)->required();
    sub->callback([&, g] {
      action = [&, g] {
        Graph G = g == "path" ? path_graph(n) : g == "cycle" ? cycle_graph(n) : g == "complete" ? complete_graph(n)
                                                                                                 : star_graph(n);
        return print_json(graph_to_json(G)), kExitOk;
      };
    });
  }
  {
    auto* sub = make->add_subcommand("fixture", "Built-in graph fixture");
    sub->add_option("id", fixture, join_numbers(graph_fixture_ids()))->required();
    sub->callback([&] { action = [&] { return print_json(graph_to_json(graph_fixture(fixture))), kExitOk; }; });
  }

  // verify
  auto* ver = app.add_subcommand("verify", "Check a theorem on enumerated instances");
  std::string id;
  bool all = false, list = false;
  VerifyOptions vopt;
  std::uint32_t vchar = 32003;
  ver->add_option("id", id, "Theorem id");
  ver->add_flag("--all", all, "Run every theorem id");
  ver->add_flag("--list", list, "List theorem ids");
  ver->add_option("--max-n", vopt.max_n, "Largest graph order (7 uses isomorphism classes)")->capture_default_str();
  ver->add_option("--seed", vopt.seed, "Seed for random ideals")->capture_default_str();
  ver->add_option("--char", vchar, "Field characteristic for Betti verdicts")->capture_default_str();
  ver->add_option("--jobs", vopt.jobs, "Worker threads, 0 for all cores")->capture_default_str();
  ver->add_option("--samples", vopt.samples, "Random instance count (0 = case default)");
  ver->add_flag("--n7", vopt.include_n7, "Add connected 7-vertex graph classes");
  bool vjson = false;
  ver->add_flag("--json", vjson, "Machine-readable output");
  ver->callback([&] {
    action = [&] {
      if (list) {
        for (const auto& t : theorem_catalog()) std::cout << t.id << "  " << t.statement << "\n";
        return kExitOk;
      }
      vopt.field = field_from(vchar);
      if (vopt.jobs == 0) vopt.jobs = std::max(1u, std::thread::hardware_concurrency());
      return verify_command(id, all, vopt, vjson);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (action) code = action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
