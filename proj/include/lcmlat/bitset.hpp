#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace lcmlat {

/// Fixed-width bitset over 64-bit words, sized at construction.
class BitSet {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitSet() = default;
  explicit BitSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend bool operator==(const BitSet&, const BitSet&) = default;

  bool is_subset_of(const BitSet& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const BitSet& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  static std::size_t intersection_count(const BitSet& a, const BitSet& b) noexcept {
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
    return c;
  }

  std::size_t find_first() const noexcept { return scan_from(0); }
  std::size_t find_next(std::size_t i) const noexcept { return i + 1 >= n_ ? npos : scan_from(i + 1); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Calls f on each bit set in both a and b.
  template <class F>
  static void for_each_common(const BitSet& a, const BitSet& b, F&& f) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      auto w = a.words_[k] & b.words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
  std::size_t scan_from(std::size_t i) const noexcept {
    std::size_t k = i >> 6;
    if (k >= words_.size()) return npos;
    auto w = words_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k >= words_.size()) return npos;
      w = words_[k];
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lcmlat
