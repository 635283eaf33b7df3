#include <algorithm>
#include <string>

#include "lcmlat/lattice.hpp"

namespace lcmlat {

namespace {

constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "atomic",        "coatomic",     "graded",   "modular",      "upper_semimodular",
    "lower_semimodular", "supersolvable", "distributive", "boolean", "geometric",
    "complemented",  "strongly_complemented", "uniquely_complemented",
};

PropertyVerdict yes() { return PropertyVerdict{true, {}, {}}; }
PropertyVerdict no(std::vector<Element> witness, std::string note) {
  return PropertyVerdict{false, std::move(witness), std::move(note)};
}

/// Cover (x, y) whose depth step is not 1, when the lattice is not graded.
std::vector<Element> grading_defect(const FiniteLattice& L) {
  auto depth = longest_chain_depths(L);
  for (Element x = 0; x < L.size(); ++x)
    for (auto y : L.upper_covers(x))
      if (depth[y] != depth[x] + 1) return {x, y};
  return {};
}

enum class RankRelation { equal, upper, lower };

PropertyVerdict rank_relation(const FiniteLattice& L, RankRelation rel) {
  auto rf = graded_rank_function(L);
  if (!rf) return no(grading_defect(L), "not graded");
  const auto& r = rf->ranks;
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = x + 1; y < L.size(); ++y) {
      int lhs = r[x] + r[y];
      int rhs = r[L.meet(x, y)] + r[L.join(x, y)];
      bool ok = rel == RankRelation::equal ? lhs == rhs : rel == RankRelation::upper ? lhs >= rhs : lhs <= rhs;
      if (!ok) return no({x, y}, "rank relation fails");
    }
  return yes();
}

}  // namespace

std::string_view property_name(Property p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Property> property_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyCount; ++i)
    if (kNames[i] == name) return kAllProperties[i];
  return std::nullopt;
}

std::vector<Element> meets_of_coatoms(const FiniteLattice& L) {
  auto co = coatoms(L);
  std::vector<Element> out;
  for (Element y = 0; y < L.size(); ++y) {
    Element m = L.top();
    for (auto c : co)
      if (L.leq(y, c)) m = L.meet(m, c);
    if (m == y) out.push_back(y);
  }
  return out;
}

std::vector<Element> joins_of_atoms(const FiniteLattice& L) {
  auto at = atoms(L);
  std::vector<Element> out;
  for (Element z = 0; z < L.size(); ++z) {
    Element j = L.bottom();
    for (auto a : at)
      if (L.leq(a, z)) j = L.join(j, a);
    if (j == z) out.push_back(z);
  }
  return out;
}

PropertyVerdict is_atomic(const FiniteLattice& L) {
  auto closure = joins_of_atoms(L);
  if (closure.size() == L.size()) return yes();
  for (Element x = 0; x < L.size(); ++x)
    if (!std::binary_search(closure.begin(), closure.end(), x)) return no({x}, "not a join of atoms");
  return yes();
}

PropertyVerdict is_coatomic(const FiniteLattice& L) {
  auto closure = meets_of_coatoms(L);
  if (closure.size() == L.size()) return yes();
  for (Element x = 0; x < L.size(); ++x)
    if (!std::binary_search(closure.begin(), closure.end(), x)) return no({x}, "not a meet of coatoms");
  return yes();
}

PropertyVerdict is_graded(const FiniteLattice& L) {
  auto defect = grading_defect(L);
  if (defect.empty()) return yes();
  return no(std::move(defect), "cover is not a unit rank step");
}

PropertyVerdict is_modular(const FiniteLattice& L) { return rank_relation(L, RankRelation::equal); }
PropertyVerdict is_upper_semimodular(const FiniteLattice& L) { return rank_relation(L, RankRelation::upper); }
PropertyVerdict is_lower_semimodular(const FiniteLattice& L) { return rank_relation(L, RankRelation::lower); }

PropertyVerdict is_supersolvable(const FiniteLattice& L) {
  auto rf = graded_rank_function(L);
  if (!rf) return no(grading_defect(L), "not graded");
  const auto& r = rf->ranks;
  const auto n = L.size();
  std::vector<char> modular(n, 1);
  for (Element m = 0; m < n; ++m)
    for (Element x = 0; x < n && modular[m]; ++x)
      if (r[m] + r[x] != r[L.meet(m, x)] + r[L.join(m, x)]) modular[m] = 0;

  // Depth-first search for a saturated bottom-to-top chain of modular elements.
  std::vector<Element> parent(n, L.size());
  std::vector<char> seen(n, 0);
  std::vector<Element> stack{L.bottom()};
  seen[L.bottom()] = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (x == L.top()) {
      std::vector<Element> chain;
      for (Element v = x; v != L.size(); v = parent[v]) chain.push_back(v);
      std::reverse(chain.begin(), chain.end());
      return PropertyVerdict{true, std::move(chain), "modular chain"};
    }
    for (auto y : L.upper_covers(x))
      if (modular[y] && !seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        stack.push_back(y);
      }
  }
  std::vector<Element> reach;
  for (Element x = 0; x < n; ++x)
    if (seen[x]) reach.push_back(x);
  return no(std::move(reach), "no maximal chain of modular elements");
}

PropertyVerdict is_distributive(const FiniteLattice& L) {
  // Distributive iff every join-irreducible j is join-prime, i.e. the elements
  // not above j are closed under joins. A failure (j, a, x) has
  // j ^ (a v x) = j != (j ^ a) v (j ^ x).
  for (auto j : join_irreducibles(L)) {
    Element acc = L.bottom();
    for (Element x = 0; x < L.size(); ++x) {
      if (L.leq(j, x)) continue;
      auto next = L.join(acc, x);
      if (L.leq(j, next)) return no({j, acc, x}, "distributive identity fails");
      acc = next;
    }
  }
  return yes();
}

PropertyVerdict is_complemented(const FiniteLattice& L) {
  for (Element x = 0; x < L.size(); ++x) {
    bool found = false;
    for (Element y = 0; y < L.size() && !found; ++y)
      found = L.meet(x, y) == L.bottom() && L.join(x, y) == L.top();
    if (!found) return no({x}, "no complement");
  }
  return yes();
}

PropertyVerdict is_strongly_complemented(const FiniteLattice& L) {
  auto meet_closed = meets_of_coatoms(L);
  auto join_closed = joins_of_atoms(L);
  auto is_complement = [&](Element x, Element y) { return L.meet(x, y) == L.bottom() && L.join(x, y) == L.top(); };
  for (Element x = 0; x < L.size(); ++x) {
    bool y_found = std::any_of(meet_closed.begin(), meet_closed.end(), [&](Element y) { return is_complement(x, y); });
    if (!y_found) return no({x}, "no complement that is a meet of coatoms");
    bool z_found = std::any_of(join_closed.begin(), join_closed.end(), [&](Element z) { return is_complement(x, z); });
    if (!z_found) return no({x}, "no complement that is a join of atoms");
  }
  return yes();
}

PropertyVerdict is_uniquely_complemented(const FiniteLattice& L) {
  for (Element x = 0; x < L.size(); ++x) {
    std::vector<Element> comps;
    for (Element y = 0; y < L.size() && comps.size() < 2; ++y)
      if (L.meet(x, y) == L.bottom() && L.join(x, y) == L.top()) comps.push_back(y);
    if (comps.empty()) return no({x}, "no complement");
    if (comps.size() > 1) return no({x, comps[0], comps[1]}, "two complements");
  }
  return yes();
}

PropertyVerdict is_boolean(const FiniteLattice& L) {
  auto d = is_distributive(L);
  if (!d.holds) return d;
  return is_complemented(L);
}

PropertyVerdict is_geometric(const FiniteLattice& L) {
  auto a = is_atomic(L);
  if (!a.holds) return a;
  return is_upper_semimodular(L);
}

PropertyVerdict check_property(const FiniteLattice& L, Property p) {
  switch (p) {
    case Property::atomic: return is_atomic(L);
    case Property::coatomic: return is_coatomic(L);
    case Property::graded: return is_graded(L);
    case Property::modular: return is_modular(L);
    case Property::upper_semimodular: return is_upper_semimodular(L);
    case Property::lower_semimodular: return is_lower_semimodular(L);
    case Property::supersolvable: return is_supersolvable(L);
    case Property::distributive: return is_distributive(L);
    case Property::boolean: return is_boolean(L);
    case Property::geometric: return is_geometric(L);
    case Property::complemented: return is_complemented(L);
    case Property::strongly_complemented: return is_strongly_complemented(L);
    case Property::uniquely_complemented: return is_uniquely_complemented(L);
  }
  return {};
}

PropertyReport property_report(const FiniteLattice& L) {
  PropertyReport report;
  for (auto p : kAllProperties) report[p] = check_property(L, p);
  return report;
}

}  // namespace lcmlat
