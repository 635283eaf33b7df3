#include <algorithm>
#include <tuple>

#include "lcmlat/lattice.hpp"

namespace lcmlat {

namespace {

using Signature = std::tuple<std::size_t, std::size_t, int, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteLattice& L) {
  auto depth = longest_chain_depths(L);
  std::vector<Signature> s(L.size());
  for (Element x = 0; x < L.size(); ++x)
    s[x] = {L.down_set(x).count(), L.up_set(x).count(), depth[x], L.upper_covers(x).size(),
            L.lower_covers(x).size()};
  return s;
}

constexpr Element kUnmapped = static_cast<Element>(-1);

/// Backtracking over images of join-irreducibles. The partial map is kept
/// closed under joins of mapped elements, so any inconsistency surfaces as
/// soon as the generating join-irreducibles are placed.
class IsoSearch {
public:
  IsoSearch(const FiniteLattice& a, const FiniteLattice& b)
      : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)), f_(a.size(), kUnmapped), g_(b.size(), kUnmapped) {
    for (auto x : a.linear_extension())
      if (x != a.bottom() && a.lower_covers(x).size() == 1) ja_.push_back(x);
    for (Element y = 0; y < b.size(); ++y)
      if (y != b.bottom() && b.lower_covers(y).size() == 1) jb_.push_back(y);
  }

  std::optional<std::vector<Element>> run() {
    if (ja_.size() != jb_.size()) return std::nullopt;
    std::vector<Element> trail;
    if (!assign(a_.bottom(), b_.bottom(), trail)) return std::nullopt;
    if (!search(0)) return std::nullopt;
    return f_;
  }

private:
  bool search(std::size_t k) {
    if (k == ja_.size()) return mapped_.size() == a_.size();
    auto j = ja_[k];
    if (f_[j] != kUnmapped) return false;  // a join-irreducible is never a join of others
    for (auto c : jb_) {
      if (g_[c] != kUnmapped || sa_[j] != sb_[c]) continue;
      std::vector<Element> trail;
      if (assign(j, c, trail) && search(k + 1)) return true;
      undo(trail);
    }
    return false;
  }

  bool map_one(Element x, Element y, std::vector<Element>& trail, std::vector<Element>& fresh) {
    if (f_[x] != kUnmapped) return f_[x] == y;
    if (g_[y] != kUnmapped || sa_[x] != sb_[y]) return false;
    f_[x] = y;
    g_[y] = x;
    mapped_.push_back(x);
    trail.push_back(x);
    fresh.push_back(x);
    return true;
  }

  bool assign(Element x, Element y, std::vector<Element>& trail) {
    std::vector<Element> fresh;
    if (!map_one(x, y, trail, fresh)) return false;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      auto u = fresh[i];
      for (std::size_t k = 0; k < mapped_.size(); ++k) {
        auto v = mapped_[k];
        if (!map_one(a_.join(u, v), b_.join(f_[u], f_[v]), trail, fresh)) return false;
      }
    }
    return true;
  }

  void undo(const std::vector<Element>& trail) {
    for (auto x : trail) {
      g_[f_[x]] = kUnmapped;
      f_[x] = kUnmapped;
    }
    mapped_.resize(mapped_.size() - trail.size());
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::vector<Signature> sa_, sb_;
  std::vector<Element> ja_, jb_;
  std::vector<Element> f_, g_;
  std::vector<Element> mapped_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& L1, const FiniteLattice& L2) {
  if (L1.size() != L2.size()) return std::nullopt;
  auto s1 = signatures(L1), s2 = signatures(L2);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  return IsoSearch(L1, L2).run();
}

bool is_isomorphic(const FiniteLattice& L1, const FiniteLattice& L2) { return find_isomorphism(L1, L2).has_value(); }

}  // namespace lcmlat
