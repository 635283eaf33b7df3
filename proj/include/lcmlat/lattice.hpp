#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcmlat/bitset.hpp"
#include "lcmlat/homology.hpp"
#include "lcmlat/monomial.hpp"

namespace lcmlat {

using Element = std::uint32_t;
using ElementSet = BitSet;
using CoverPair = std::pair<Element, Element>;

/// Meet and join tables are N x N, so element counts are capped here.
inline constexpr std::size_t kMaxLatticeElements = 4096;

/**
 * A finite bounded lattice on elements 0..N-1.
 *
 * Immutable once built: the order is held as down-set and up-set bitsets,
 * meets and joins as full tables, covers as adjacency lists. Element indices
 * are those supplied by the caller; nothing is renumbered. Optional monomial
 * labels must realize the order as divisibility with joins as lcms.
 */
class FiniteLattice {
public:
  /// Reflexive-transitive closure of `covers` (pairs low < high).
  static FiniteLattice from_covers(std::size_t n, const std::vector<CoverPair>& covers,
                                   std::vector<Monomial> labels = {});

  /// `down_sets[i]` must contain exactly the j with j <= i (reflexive, transitive).
  static FiniteLattice from_down_sets(std::vector<ElementSet> down_sets, std::vector<Monomial> labels = {});

  std::size_t size() const noexcept { return n_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const { return down_[y].test(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[static_cast<std::size_t>(x) * n_ + y]; }
  Element join(Element x, Element y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }

  const ElementSet& down_set(Element x) const { return down_[x]; }
  const ElementSet& up_set(Element x) const { return up_[x]; }
  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }
  std::vector<CoverPair> cover_pairs() const;

  /// Elements sorted so that x < y implies x precedes y.
  const std::vector<Element>& linear_extension() const noexcept { return order_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const Monomial& label(Element x) const { return labels_.at(x); }
  const std::vector<Monomial>& labels() const noexcept { return labels_; }

private:
  FiniteLattice() = default;
  void build(std::vector<ElementSet> down, std::vector<Monomial> labels);

  std::size_t n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<Element> order_;
  std::vector<Monomial> labels_;
};

struct RankFunction {
  std::vector<int> ranks;
  int height = 0;
};

std::vector<Element> atoms(const FiniteLattice& L);
std::vector<Element> coatoms(const FiniteLattice& L);
/// Non-top elements with exactly one upper cover.
std::vector<Element> meet_irreducibles(const FiniteLattice& L);
/// Non-bottom elements with exactly one lower cover.
std::vector<Element> join_irreducibles(const FiniteLattice& L);

/// Length of the longest chain from bottom to each element.
std::vector<int> longest_chain_depths(const FiniteLattice& L);
/// Length (edge count) of the longest bottom-to-top chain.
int height(const FiniteLattice& L);
/// The rank function if every cover is a unit step of the longest-chain depth.
std::optional<RankFunction> graded_rank_function(const FiniteLattice& L);

std::int64_t mobius(const FiniteLattice& L, Element x, Element y);

/// Order complex of the open interval (lo, hi). Vertices are listed in
/// linear-extension order, so every chain is an increasing vertex list.
/// `max_dim` >= 0 truncates to faces of at most that dimension.
SimplicialComplexData open_interval_order_complex(const FiniteLattice& L, Element lo, Element hi, int max_dim = -1);

/// Number of connected components of the comparability graph of (lo, hi).
std::size_t open_interval_components(const FiniteLattice& L, Element lo, Element hi);

/// Number of nonempty chains in the open interval (lo, hi).
std::uint64_t open_interval_chain_count(const FiniteLattice& L, Element lo, Element hi);

/// Crosscut complex of the atoms below `hi`: sets of such atoms whose join is
/// strictly below `hi`. Homotopy equivalent to the order complex of (bottom, hi).
/// Vertices are the atoms in ascending element order.
SimplicialComplexData atom_crosscut_complex(const FiniteLattice& L, Element hi);

FiniteLattice dual(const FiniteLattice& L);
/// Componentwise order; element (a, b) has index a * |L2| + b. Labels of
/// labeled factors are concatenated over disjoint variable sets.
FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2);

bool is_isomorphic(const FiniteLattice& L1, const FiniteLattice& L2);
/// An order isomorphism L1 -> L2 as an element map, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& L1, const FiniteLattice& L2);

/// Maximum antichain size in the subposet of meet-irreducible elements.
std::size_t mi_width(const FiniteLattice& L);

// ---------------------------------------------------------------------------
// Property predicates

enum class Property : std::uint8_t {
  atomic,
  coatomic,
  graded,
  modular,
  upper_semimodular,
  lower_semimodular,
  supersolvable,
  distributive,
  boolean,
  geometric,
  complemented,
  strongly_complemented,
  uniquely_complemented,
};

inline constexpr std::size_t kPropertyCount = 13;
inline constexpr std::array<Property, kPropertyCount> kAllProperties = {
    Property::atomic,         Property::coatomic,          Property::graded,
    Property::modular,        Property::upper_semimodular, Property::lower_semimodular,
    Property::supersolvable,  Property::distributive,      Property::boolean,
    Property::geometric,      Property::complemented,      Property::strongly_complemented,
    Property::uniquely_complemented,
};

std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);

/**
 * Verdict plus witness. For a false verdict the witness violates the
 * definition (e.g. a pair breaking the rank identity); for supersolvable the
 * witness of a true verdict is a modular maximal chain.
 */
struct PropertyVerdict {
  bool holds = false;
  std::vector<Element> witness;
  std::string note;
};

struct PropertyReport {
  std::array<PropertyVerdict, kPropertyCount> verdicts;

  const PropertyVerdict& operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
  PropertyVerdict& operator[](Property p) { return verdicts[static_cast<std::size_t>(p)]; }
  bool holds(Property p) const { return (*this)[p].holds; }
};

PropertyVerdict is_atomic(const FiniteLattice& L);
PropertyVerdict is_coatomic(const FiniteLattice& L);
PropertyVerdict is_graded(const FiniteLattice& L);
PropertyVerdict is_modular(const FiniteLattice& L);
PropertyVerdict is_upper_semimodular(const FiniteLattice& L);
PropertyVerdict is_lower_semimodular(const FiniteLattice& L);
PropertyVerdict is_supersolvable(const FiniteLattice& L);
PropertyVerdict is_distributive(const FiniteLattice& L);
PropertyVerdict is_boolean(const FiniteLattice& L);
PropertyVerdict is_geometric(const FiniteLattice& L);
PropertyVerdict is_complemented(const FiniteLattice& L);
PropertyVerdict is_strongly_complemented(const FiniteLattice& L);
PropertyVerdict is_uniquely_complemented(const FiniteLattice& L);

PropertyVerdict check_property(const FiniteLattice& L, Property p);
PropertyReport property_report(const FiniteLattice& L);

/// Elements expressible as a meet of coatoms (top is the empty meet).
std::vector<Element> meets_of_coatoms(const FiniteLattice& L);
/// Elements expressible as a join of atoms (bottom is the empty join).
std::vector<Element> joins_of_atoms(const FiniteLattice& L);

}  // namespace lcmlat
