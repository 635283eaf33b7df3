#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lcmlat {

using Exponent = std::uint32_t;

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// Squarefree monomial from a list of 0-based variable indices.
  static Monomial from_support(std::size_t nvars, const std::vector<std::size_t>& vars);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const noexcept;

  /// Renders as "x1*x3^2"; the unit monomial renders as "1". Variables are 1-based.
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded order used for deterministic element layouts: total degree first,
/// then lexicographic on exponents.
bool degree_lex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace lcmlat
