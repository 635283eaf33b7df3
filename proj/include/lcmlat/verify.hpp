#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcmlat/field.hpp"
#include "lcmlat/graph.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/io.hpp"

namespace lcmlat {

struct RandomIdealSpec {
  std::size_t max_vars = 5;
  std::size_t max_gens = 5;
  std::size_t max_degree = 3;
};

/// nvars uniform in [2, max_vars], generator count in [1, max_gens], each
/// generator uniform over non-unit monomials of degree <= max_degree; minimalized.
MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealSpec& spec);

/// Deterministic per-instance stream derived from (seed, index).
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

/// All connected labeled graphs on n vertices, ordered by edge bitmask.
std::vector<Graph> connected_labeled_graphs(std::size_t n);
/// One representative per isomorphism class of connected graphs on n vertices.
std::vector<Graph> connected_graph_classes(std::size_t n);

struct VerifyOptions {
  std::size_t max_n = 6;
  std::uint64_t seed = 1;
  /// Field for Betti-dependent verdicts; char 2 is always run alongside it.
  FieldSpec field = FieldSpec::default_field();
  unsigned jobs = 1;
  /// Random instance count; 0 selects the case default.
  std::size_t samples = 0;
  /// Adds isomorphism classes of connected 7-vertex graphs to graph cases.
  bool include_n7 = false;
};

struct Counterexample {
  std::string instance;
  std::string detail;
  std::string reproduce;
};

struct VerificationResult {
  std::string id;
  std::size_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0;
  std::uint64_t seed = 0;
  std::string field;

  bool passed() const noexcept { return counterexamples.empty(); }
};

struct TheoremCase {
  std::string id;
  std::string statement;
};

const std::vector<TheoremCase>& theorem_catalog();
bool is_theorem_id(std::string_view id);

/// Throws BadTheoremId for unknown ids.
VerificationResult verify(std::string_view id, const VerifyOptions& options = {});

/// Deterministic for fixed options (timing excluded).
json result_to_json(const VerificationResult& r);

}  // namespace lcmlat
