#include "lcmlat/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "lcmlat/error.hpp"

namespace lcmlat {

Monomial Monomial::from_support(std::size_t nvars, const std::vector<std::size_t>& vars) {
  Monomial m(nvars);
  for (auto v : vars) {
    if (v >= nvars) throw Error(ErrorCode::BadParameter, "variable index out of range");
    m.exps_[v] = 1;
  }
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (other.exps_.size() != exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::BadParameter, "lcm of monomials in different rings");
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::BadParameter, "gcd of monomials in different rings");
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lcmlat
