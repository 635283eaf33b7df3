#include "lcmlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lcmlat/error.hpp"

namespace lcmlat {

namespace {

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_number(const std::string& s, std::size_t& pos, std::string_view source, std::size_t line) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    parse_fail(source, line, "expected a number at column " + std::to_string(pos + 1));
  std::size_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::size_t>(s[pos] - '0');
    if (v > 1'000'000) parse_fail(source, line, "number too large");
    ++pos;
  }
  return v;
}

/// Sparse (variable, exponent) list of one monomial, 0-based variables.
std::vector<std::pair<std::size_t, std::size_t>> parse_monomial(const std::string& text, std::string_view source,
                                                                std::size_t line) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1") return {};
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != 'x') parse_fail(source, line, "expected 'x' at column " + std::to_string(pos + 1));
    ++pos;
    auto var = parse_number(s, pos, source, line);
    if (var == 0) parse_fail(source, line, "variables are numbered from x1");
    std::size_t e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = parse_number(s, pos, source, line);
    }
    out.emplace_back(var - 1, e);
    if (pos == s.size()) break;
    if (s[pos] != '*') parse_fail(source, line, std::string("unexpected '") + s[pos] + "'");
    ++pos;
  }
  return out;
}

Monomial build_monomial(const std::vector<std::pair<std::size_t, std::size_t>>& sparse, std::size_t nvars) {
  Monomial m(nvars);
  for (auto [v, e] : sparse) m[v] += static_cast<Exponent>(e);
  return m;
}

std::size_t json_line(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string fixed_width(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

}  // namespace

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

MonomialIdeal parse_ideal_text(std::string_view text, std::string_view source) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sparse;
  std::size_t nvars = 0, line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::stringstream items(line);
    for (std::string item; std::getline(items, item, ',');) {
      item = trim(item);
      if (item.empty()) continue;
      auto m = parse_monomial(item, source, line_no);
      if (m.empty()) throw Error(ErrorCode::UnitGenerator, std::string(source) + ":" + std::to_string(line_no) + ": unit generator");
      for (auto [v, e] : m) nvars = std::max(nvars, v + 1);
      sparse.push_back(std::move(m));
    }
  }
  if (sparse.empty()) throw Error(ErrorCode::EmptyGeneratorSet, std::string(source) + ": no generators");
  std::vector<Monomial> gens;
  for (const auto& s : sparse) gens.push_back(build_monomial(s, nvars));
  return minimalize(gens);
}

std::string ideal_to_text(const MonomialIdeal& I) {
  std::string out;
  for (const auto& g : I.generators()) out += g.to_string() + "\n";
  return out;
}

json ideal_to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(g.exponents());
  return json{{"nvars", I.nvars()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const json& j) {
  try {
    auto nvars = j.at("nvars").get<std::size_t>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) {
      auto e = g.get<std::vector<Exponent>>();
      if (e.size() != nvars) throw Error(ErrorCode::ParseError, "generator length differs from nvars");
      gens.emplace_back(std::move(e));
    }
    return minimalize(gens);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("ideal JSON: ") + e.what());
  }
}

json lattice_to_json(const FiniteLattice& L) {
  json covers = json::array();
  for (auto [lo, hi] : L.cover_pairs()) covers.push_back({lo, hi});
  json out{{"n", L.size()}, {"covers", std::move(covers)}};
  if (L.has_labels()) {
    json labels = json::array();
    for (const auto& m : L.labels()) labels.push_back(m.to_string());
    out["labels"] = std::move(labels);
  }
  return out;
}

FiniteLattice lattice_from_json(const json& j) {
  try {
    auto n = j.at("n").get<std::size_t>();
    std::vector<CoverPair> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "each cover must be a pair");
      covers.emplace_back(c[0].get<Element>(), c[1].get<Element>());
    }
    std::vector<Monomial> labels;
    if (j.contains("labels")) {
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sparse;
      std::size_t nvars = 0, k = 0;
      for (const auto& l : j.at("labels")) {
        sparse.push_back(parse_monomial(l.get<std::string>(), "labels", ++k));
        for (auto [v, e] : sparse.back()) nvars = std::max(nvars, v + 1);
      }
      for (const auto& s : sparse) labels.push_back(build_monomial(s, nvars));
    }
    return FiniteLattice::from_covers(n, covers, std::move(labels));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("lattice JSON: ") + e.what());
  }
}

json graph_to_json(const Graph& G) {
  json edges = json::array();
  for (auto [u, v] : G.edges()) edges.push_back({u, v});
  return json{{"n", G.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  try {
    Graph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "each edge must be a pair");
      g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + e.what());
  }
}

json property_report_to_json(const PropertyReport& r) {
  json out = json::object();
  for (auto p : kAllProperties) {
    const auto& v = r[p];
    json entry{{"verdict", v.holds}};
    if (!v.witness.empty()) entry["witness"] = v.witness;
    if (!v.note.empty()) entry["note"] = v.note;
    out[std::string(property_name(p))] = std::move(entry);
  }
  return out;
}

std::string property_report_to_text(const PropertyReport& r) {
  std::size_t width = 0;
  for (auto p : kAllProperties) width = std::max(width, property_name(p).size());
  std::string out;
  for (auto p : kAllProperties) {
    const auto& v = r[p];
    std::string name(property_name(p));
    out += name + std::string(width - name.size() + 2, ' ') + (v.holds ? "true " : "false");
    if (!v.witness.empty() || !v.note.empty()) {
      out += "  ";
      if (!v.note.empty()) out += v.note;
      if (!v.witness.empty()) {
        out += v.note.empty() ? "(" : " (";
        for (std::size_t k = 0; k < v.witness.size(); ++k) out += (k ? "," : "") + std::to_string(v.witness[k]);
        out += ")";
      }
    }
    out += "\n";
  }
  return out;
}

std::string betti_to_text(const BettiTable& t) {
  auto graded = t.graded();
  const auto pd = t.pd();
  std::uint64_t max_row = 0;
  for (const auto& [key, rank] : graded) max_row = std::max(max_row, key.second - key.first);
  std::vector<std::vector<std::string>> cells(max_row + 1, std::vector<std::string>(pd + 1, "-"));
  for (const auto& [key, rank] : graded) cells[key.second - key.first][key.first] = std::to_string(rank);

  std::vector<std::size_t> width(pd + 1, 1);
  for (std::size_t i = 0; i <= pd; ++i) {
    width[i] = std::to_string(i).size();
    for (const auto& row : cells) width[i] = std::max(width[i], row[i].size());
  }
  const auto label_width = std::to_string(max_row).size();
  std::string out = std::string(label_width, ' ') + " |";
  for (std::size_t i = 0; i <= pd; ++i) out += " " + fixed_width(std::to_string(i), width[i]);
  out += "\n" + std::string(label_width + 1, '-') + "+";
  for (std::size_t i = 0; i <= pd; ++i) out += std::string(width[i] + 1, '-');
  out += "\n";
  for (std::size_t r = 0; r <= max_row; ++r) {
    out += fixed_width(std::to_string(r), label_width) + " |";
    for (std::size_t i = 0; i <= pd; ++i) out += " " + fixed_width(cells[r][i], width[i]);
    out += "\n";
  }
  return out;
}

json betti_to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& e : t.multigraded)
    entries.push_back({{"i", e.i}, {"j", e.degree()}, {"m", e.m.exponents()}, {"rank", e.rank}});
  json out{{"field", t.field.name()}, {"pd", t.pd()}, {"entries", std::move(entries)}};
  if (!t.warnings.empty()) out["warnings"] = t.warnings;
  return out;
}

Loaded parse_input(std::string_view text, std::string_view source) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') return parse_ideal_text(text, source);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(source, json_line(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  if (j.contains("lattice") && j["lattice"].is_object()) return lattice_from_json(j["lattice"]);
  if (j.contains("covers")) return lattice_from_json(j);
  if (j.contains("edges")) return graph_from_json(j);
  if (j.contains("gens")) return ideal_from_json(j);
  throw Error(ErrorCode::ParseError, std::string(source) + ": JSON object has none of 'covers', 'edges', 'gens'");
}

Loaded load_input(const std::string& path) { return parse_input(read_source(path), path == "-" ? "<stdin>" : path); }

MonomialIdeal as_ideal(const Loaded& input) {
  if (auto* I = std::get_if<MonomialIdeal>(&input)) return *I;
  if (auto* G = std::get_if<Graph>(&input)) return edge_ideal(*G);
  return phan_ideal(std::get<FiniteLattice>(input));
}

FiniteLattice as_lattice(const Loaded& input) {
  if (auto* L = std::get_if<FiniteLattice>(&input)) return *L;
  if (auto* G = std::get_if<Graph>(&input)) return graph_lcm_lattice(*G);
  return lcm_lattice(std::get<MonomialIdeal>(input));
}

Graph as_graph(const Loaded& input) {
  if (auto* G = std::get_if<Graph>(&input)) return *G;
  throw Error(ErrorCode::BadParameter, "expected a graph (JSON with \"n\" and \"edges\")");
}

}  // namespace lcmlat
