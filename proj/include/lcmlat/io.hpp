#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "lcmlat/graph.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/resolution.hpp"

namespace lcmlat {

using json = nlohmann::ordered_json;

/// Whole file, or standard input for "-". Throws ParseError if unreadable.
std::string read_source(const std::string& path);

/// One monomial per line (`x1*x3^2`), `#` comments, nvars = largest index used.
MonomialIdeal parse_ideal_text(std::string_view text, std::string_view source = "<input>");
std::string ideal_to_text(const MonomialIdeal& I);

json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const json& j);

/// {"n": N, "covers": [[i, j], ...], "labels": [...]}; labels only when present.
json lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const json& j);

json graph_to_json(const Graph& G);
Graph graph_from_json(const json& j);

json property_report_to_json(const PropertyReport& r);
/// Aligned `name  true|false  [witness]` lines.
std::string property_report_to_text(const PropertyReport& r);

/// Graded table: columns i, rows j - i, `-` for zero.
std::string betti_to_text(const BettiTable& t);
/// {"field": ..., "entries": [{"i", "j", "m", "rank"}]}.
json betti_to_json(const BettiTable& t);

using Loaded = std::variant<MonomialIdeal, FiniteLattice, Graph>;

/**
 * Parses any supported input. JSON objects are told apart by key: "covers"
 * (or a nested "lattice") is a lattice, "edges" a graph, "gens" an ideal.
 * Anything else is read as ideal text.
 */
Loaded parse_input(std::string_view text, std::string_view source = "<input>");
Loaded load_input(const std::string& path);

/// Conversions used by consumers: a graph gives its edge ideal, a lattice its Phan ideal.
MonomialIdeal as_ideal(const Loaded& input);
/// A lattice as is; an ideal or graph gives its LCM lattice.
FiniteLattice as_lattice(const Loaded& input);
/// Throws BadParameter unless the input is a graph.
Graph as_graph(const Loaded& input);

}  // namespace lcmlat
