#pragma once

#include <cstdint>
#include <string>

namespace lcmlat {

/// Coefficient field: characteristic 0 means exact rationals, otherwise Z/p.
struct FieldSpec {
  std::uint32_t characteristic = 32003;

  static FieldSpec rationals() { return FieldSpec{0}; }
  /// Throws BadParameter unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec default_field() { return FieldSpec{32003}; }

  bool is_rational() const noexcept { return characteristic == 0; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Throws BadParameter when the characteristic is neither 0 nor a prime.
void validate(const FieldSpec& field);

namespace modp {

inline std::uint32_t reduce(std::int64_t x, std::uint32_t p) noexcept {
  auto r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + (p - b);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

}  // namespace modp

}  // namespace lcmlat
