#include "lcmlat/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "lcmlat/error.hpp"
#include "lcmlat/field.hpp"

namespace lcmlat {

namespace {

/// Vectors of F_q^r encoded base q, coordinate 0 least significant.
std::uint64_t encode(const std::vector<std::uint32_t>& v, std::uint32_t q) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * q + v[i];
  return code;
}

}  // namespace

std::uint64_t subspace_count(std::uint32_t q, std::uint32_t r) {
  // Gaussian binomials via the recurrence [r, k] = [r-1, k-1] + q^k [r-1, k].
  std::vector<std::uint64_t> row{1};
  for (std::uint32_t n = 1; n <= r; ++n) {
    std::vector<std::uint64_t> next(n + 1, 1);
    std::uint64_t qk = 1;
    for (std::uint32_t k = 1; k < n; ++k) {
      qk *= q;
      next[k] = row[k - 1] + qk * row[k];
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : row) total += c;
  return total;
}

FiniteLattice subspace_lattice(std::uint32_t q, std::uint32_t r) {
  if (!is_prime(q)) throw Error(ErrorCode::BadParameter, "q must be prime, got " + std::to_string(q));
  if (r < 1) throw Error(ErrorCode::BadParameter, "dimension r must be at least 1");
  if (r > 16 || subspace_count(q, r) > kMaxLatticeElements)
    throw Error(ErrorCode::TooLarge, "F_" + std::to_string(q) + "^" + std::to_string(r) + " has too many subspaces");
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < r; ++i) space *= q;
  if (space > (1u << 20)) throw Error(ErrorCode::TooLarge, "vector space too large to enumerate");

  std::vector<BitSet> spaces;
  for (std::uint32_t k = 0; k <= r; ++k) {
    // Choose pivot columns, then fill each free entry right of its pivot.
    std::vector<std::uint32_t> pivots;
    std::function<void(std::uint32_t)> choose = [&](std::uint32_t start) {
      if (pivots.size() == k) {
        std::vector<std::pair<std::size_t, std::uint32_t>> free_slots;
        for (std::uint32_t i = 0; i < k; ++i)
          for (std::uint32_t c = pivots[i] + 1; c < r; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.emplace_back(i, c);
        std::vector<std::vector<std::uint32_t>> basis(k, std::vector<std::uint32_t>(r, 0));
        for (std::uint32_t i = 0; i < k; ++i) basis[i][pivots[i]] = 1;
        std::function<void(std::size_t)> fill = [&](std::size_t s) {
          if (s == free_slots.size()) {
            BitSet span(space);
            std::vector<std::uint32_t> coeff(k, 0), v(r);
            while (true) {
              for (std::uint32_t c = 0; c < r; ++c) {
                std::uint64_t acc = 0;
                for (std::uint32_t i = 0; i < k; ++i) acc += static_cast<std::uint64_t>(coeff[i]) * basis[i][c];
                v[c] = static_cast<std::uint32_t>(acc % q);
              }
              span.set(encode(v, q));
              std::uint32_t i = 0;
              while (i < k && ++coeff[i] == q) coeff[i++] = 0;
              if (i == k) break;
            }
            spaces.push_back(std::move(span));
            return;
          }
          auto [row, col] = free_slots[s];
          for (std::uint32_t a = 0; a < q; ++a) {
            basis[row][col] = a;
            fill(s + 1);
          }
          basis[row][col] = 0;
        };
        fill(0);
        return;
      }
      for (std::uint32_t c = start; c < r; ++c) {
        pivots.push_back(c);
        choose(c + 1);
        pivots.pop_back();
      }
    };
    choose(0);
  }

  const auto n = spaces.size();
  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (spaces[x].is_subset_of(spaces[y])) down[y].set(x);
  return FiniteLattice::from_down_sets(std::move(down));
}

FiniteLattice mn_lattice(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "M_n needs n >= 1");
  if (n + 2 > kMaxLatticeElements) throw Error(ErrorCode::TooLarge, "M_n exceeds lattice capacity");
  const auto top = static_cast<Element>(n + 1);
  std::vector<CoverPair> covers;
  for (Element a = 1; a <= n; ++a) {
    covers.emplace_back(0, a);
    covers.emplace_back(a, top);
  }
  return FiniteLattice::from_covers(n + 2, covers);
}

FiniteLattice fano_lattice() {
  // Lines (1-based) through each point a..g.
  constexpr std::array<std::array<Element, 3>, 7> lines_through = {{
      {1, 3, 6}, {1, 4, 7}, {1, 2, 5}, {3, 4, 5}, {2, 3, 7}, {2, 4, 6}, {5, 6, 7},
  }};
  std::vector<CoverPair> covers;
  for (Element p = 1; p <= 7; ++p) {
    covers.emplace_back(0, p);
    for (auto line : lines_through[p - 1]) covers.emplace_back(p, 7 + line);
  }
  for (Element line = 8; line <= 14; ++line) covers.emplace_back(line, 15);
  return FiniteLattice::from_covers(16, covers);
}

FiniteLattice graphic_matroid_lattice() {
  std::vector<CoverPair> covers = {
      {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},                      // edges
      {1, 6},  {2, 6},  {3, 6},                                        // 123
      {1, 7},  {4, 7},                                                 // 14
      {2, 8},  {4, 8},                                                 // 24
      {1, 9},  {5, 9},                                                 // 15
      {2, 10}, {5, 10},                                                // 25
      {3, 11}, {4, 11}, {5, 11},                                       // 345
      {6, 12}, {7, 12}, {8, 12}, {9, 12}, {10, 12}, {11, 12},
  };
  return FiniteLattice::from_covers(13, covers);
}

}  // namespace lcmlat
