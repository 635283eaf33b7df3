#pragma once

#include <string>
#include <vector>

#include "lcmlat/lattice.hpp"
#include "lcmlat/monomial.hpp"

namespace lcmlat {

/// A monomial ideal held by its minimal generators, in first-seen order.
class MonomialIdeal {
public:
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  /// Number of minimal generators.
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_squarefree() const;
  /// Generators joined by ", ".
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimalize(const std::vector<Monomial>& monomials);
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal monomials (duplicates collapse to the first).
MonomialIdeal minimalize(const std::vector<Monomial>& monomials);

/**
 * LCM lattice: bottom = 1, elements 1..q are the generators in ideal order,
 * the remaining lcms follow in degree-lex order. Labels are the monomials.
 */
FiniteLattice lcm_lattice(const MonomialIdeal& I);

/// Standard polarization; x_i^e becomes y_{i,1}...y_{i,e}, new variables
/// grouped by original variable and numbered consecutively.
MonomialIdeal polarize(const MonomialIdeal& I);

/**
 * Phan's minimal ideal: variable x_k for the k-th meet-irreducible (ascending
 * element index), generator for the k-th atom (ascending index) equal to the
 * product of x_a over meet-irreducibles a not above it.
 */
MonomialIdeal phan_ideal(const FiniteLattice& L);

/// Minimum number of variables meeting the support of every generator.
std::size_t ideal_height(const MonomialIdeal& I);

/// Squarefree and equal to the Phan ideal of its LCM lattice up to renaming variables.
bool is_minimal_ideal(const MonomialIdeal& I);

/// Drops variables that divide no generator, renumbering the rest in order.
MonomialIdeal drop_unused_variables(const MonomialIdeal& I);

/// True iff some bijection of used variables carries one generator set onto the other.
bool equivalent_up_to_variable_permutation(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace lcmlat
