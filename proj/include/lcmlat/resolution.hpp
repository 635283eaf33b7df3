#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcmlat/field.hpp"
#include "lcmlat/ideal.hpp"

namespace lcmlat {

struct BettiEntry {
  std::size_t i = 0;
  Monomial m;
  std::size_t rank = 0;

  std::uint64_t degree() const noexcept { return m.degree(); }
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/**
 * Betti numbers of S/I. Only nonzero entries are stored, sorted by
 * (i, degree, exponents); beta_0 is the single entry at the unit monomial.
 */
struct BettiTable {
  FieldSpec field;
  std::vector<BettiEntry> multigraded;
  bool char0_confirmed = false;
  std::vector<std::string> warnings;

  /// Coarse table (i, total degree j) -> rank.
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded() const;
  std::size_t graded_at(std::size_t i, std::uint64_t j) const;
  /// Sum of column i.
  std::size_t total(std::size_t i) const;
  std::size_t rank_at(std::size_t i, const Monomial& m) const;
  std::size_t pd() const;
};

/// Complex used for the homology of an open interval (1, m).
enum class IntervalComplex {
  /// The smaller of the two below, by face count.
  automatic,
  /// Chains of the open interval.
  order_complex,
  /// Sets of atoms below m whose join is strictly below m (crosscut complex).
  atom_crosscut,
};

struct BettiOptions {
  FieldSpec field = FieldSpec::default_field();
  bool confirm_char0 = true;
  IntervalComplex complex = IntervalComplex::automatic;
  /// Worker threads for interval homology; 0 means hardware concurrency.
  unsigned jobs = 1;
};

/// beta_{i,m}(S/I) = rank of reduced H_{i-2} of the open interval (1, m) in the LCM lattice.
BettiTable betti_table(const MonomialIdeal& I, const BettiOptions& options = {});
BettiTable betti_table(const MonomialIdeal& I, FieldSpec field);

/// Generator count accepted by the Taylor oracle.
inline constexpr std::size_t kTaylorMaxGenerators = 16;

/**
 * Independent oracle: homology of each multidegree strand of the Taylor
 * complex tensored with the field. Prime fields only.
 */
BettiTable taylor_betti_table(const MonomialIdeal& I, FieldSpec field);

std::size_t projective_dimension(const MonomialIdeal& I, FieldSpec field = FieldSpec::default_field());
bool is_cohen_macaulay(const MonomialIdeal& I, FieldSpec field = FieldSpec::default_field());

struct TaylorReport {
  bool is_minimal = true;
  /// Generator indices of sigma and the omitted generator p with lcm(sigma) = lcm(sigma - p).
  std::vector<std::size_t> subset;
  std::size_t omitted = 0;
};

TaylorReport taylor_is_minimal(const MonomialIdeal& I);

/// Each generator carries a variable power strictly larger than in every other generator.
bool has_unique_variable_powers(const MonomialIdeal& I);

struct BooleanEquivalence {
  bool lattice_boolean = false;
  bool unique_variable_powers = false;
  bool taylor_minimal = false;
  bool pd_equals_generator_count = false;

  bool consistent() const noexcept;
};

/// Throws EquivalenceViolation when `enforce` is set and the four statements disagree.
BooleanEquivalence boolean_equivalence_report(const MonomialIdeal& I, FieldSpec field = FieldSpec::default_field(),
                                              bool enforce = true);

struct PurityReport {
  bool pure = false;
  /// d_0, ..., d_pd when pure.
  std::vector<std::uint64_t> degrees;
};

PurityReport is_pure(const BettiTable& table);
PurityReport is_pure(const MonomialIdeal& I, FieldSpec field = FieldSpec::default_field());

struct PdHeightReport {
  std::size_t pd = 0;
  int lattice_height = 0;
  bool equal = false;
  bool lattice_geometric = false;
  bool lattice_lsm_coatomic = false;
  bool lattice_strongly_complemented = false;

  /// pd <= height; geometric => equal; lsm and coatomic => equal; equal => strongly complemented.
  std::vector<std::string> violations() const;
};

/// Throws ContractViolation when `enforce` is set and a contract fails.
PdHeightReport pd_vs_height_report(const MonomialIdeal& I, FieldSpec field = FieldSpec::default_field(),
                                   bool enforce = true);

}  // namespace lcmlat
