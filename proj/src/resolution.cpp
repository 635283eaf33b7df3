#include "lcmlat/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "lcmlat/error.hpp"
#include "lcmlat/homology.hpp"

namespace lcmlat {

std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> out;
  for (const auto& e : multigraded) out[{e.i, e.degree()}] += e.rank;
  return out;
}

std::size_t BettiTable::graded_at(std::size_t i, std::uint64_t j) const {
  std::size_t s = 0;
  for (const auto& e : multigraded)
    if (e.i == i && e.degree() == j) s += e.rank;
  return s;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t s = 0;
  for (const auto& e : multigraded)
    if (e.i == i) s += e.rank;
  return s;
}

std::size_t BettiTable::rank_at(std::size_t i, const Monomial& m) const {
  for (const auto& e : multigraded)
    if (e.i == i && e.m == m) return e.rank;
  return 0;
}

std::size_t BettiTable::pd() const {
  std::size_t p = 0;
  for (const auto& e : multigraded) p = std::max(p, e.i);
  return p;
}

namespace {

void sort_entries(std::vector<BettiEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.m < b.m;
  });
}

SimplicialComplexData interval_complex(const FiniteLattice& L, Element m, IntervalComplex kind) {
  if (kind == IntervalComplex::automatic) {
    std::size_t below = 0;
    for (auto a : atoms(L))
      if (L.leq(a, m)) ++below;
    const auto crosscut_bound = below >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << below);
    kind = open_interval_chain_count(L, L.bottom(), m) + 1 <= crosscut_bound ? IntervalComplex::order_complex
                                                                            : IntervalComplex::atom_crosscut;
  }
  if (kind == IntervalComplex::order_complex) return open_interval_order_complex(L, L.bottom(), m);
  return atom_crosscut_complex(L, m);
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, const BettiOptions& options) {
  validate(options.field);
  auto L = lcm_lattice(I);
  const auto n = L.size();
  std::vector<HomologyRanks> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t x; (x = next.fetch_add(1)) < n;) {
      auto m = static_cast<Element>(x);
      if (m == L.bottom()) continue;
      results[x] = reduced_homology(interval_complex(L, m, options.complex), options.field, options.confirm_char0);
    }
  };
  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  BettiTable table;
  table.field = options.field;
  table.multigraded.push_back({0, L.label(L.bottom()), 1});
  table.char0_confirmed = !options.field.is_rational() && options.confirm_char0;
  for (Element m = 0; m < n; ++m) {
    if (m == L.bottom()) continue;
    const auto& r = results[m];
    if (!r.char0_confirmed) table.char0_confirmed = false;
    for (const auto& w : r.warnings) table.warnings.push_back(L.label(m).to_string() + ": " + w);
    // ranks[k] is reduced homology in dimension k - 1, which gives beta_{k+1}.
    for (std::size_t k = 0; k < r.ranks.size(); ++k)
      if (r.ranks[k] != 0) table.multigraded.push_back({k + 1, L.label(m), r.ranks[k]});
  }
  sort_entries(table.multigraded);
  return table;
}

BettiTable betti_table(const MonomialIdeal& I, FieldSpec field) {
  BettiOptions options;
  options.field = field;
  return betti_table(I, options);
}

namespace {

/// Rank of a dense matrix over Z/p by row reduction.
std::size_t dense_rank_modp(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto inv = modp::inverse(rows[rank][c], p);
    for (auto& v : rows[rank]) v = modp::mul(v, inv, p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const auto f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = modp::sub(rows[r][k], modp::mul(f, rows[rank][k], p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BettiTable taylor_betti_table(const MonomialIdeal& I, FieldSpec field) {
  validate(field);
  if (field.is_rational()) throw Error(ErrorCode::BadParameter, "the Taylor oracle works over prime fields only");
  const auto q = I.size();
  if (q > kTaylorMaxGenerators)
    throw Error(ErrorCode::TooLarge, "Taylor oracle limited to " + std::to_string(kTaylorMaxGenerators) + " generators");
  const auto p = field.characteristic;
  const std::uint32_t subsets = 1u << q;

  std::vector<Monomial> lcms(subsets);
  lcms[0] = Monomial(I.nvars());
  for (std::uint32_t s = 1; s < subsets; ++s) {
    auto low = static_cast<std::size_t>(std::countr_zero(s));
    lcms[s] = lcm(lcms[s & (s - 1)], I.generators()[low]);
  }
  std::unordered_map<Monomial, std::vector<std::uint32_t>, MonomialHash> strands;
  for (std::uint32_t s = 0; s < subsets; ++s) strands[lcms[s]].push_back(s);

  BettiTable table;
  table.field = field;
  for (const auto& [m, members] : strands) {
    // Basis of the strand in each homological degree |sigma|.
    std::vector<std::vector<std::uint32_t>> by_size(q + 1);
    for (auto s : members) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    std::vector<std::size_t> rank_d(q + 2, 0);
    for (std::size_t i = 1; i <= q; ++i) {
      const auto& src = by_size[i];
      const auto& dst = by_size[i - 1];
      if (src.empty() || dst.empty()) continue;
      std::unordered_map<std::uint32_t, std::size_t> row_of;
      for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
      // Rows indexed by sources so the matrix is |src| x |dst|; rank is transpose-invariant.
      std::vector<std::vector<std::uint32_t>> mat(src.size(), std::vector<std::uint32_t>(dst.size(), 0));
      for (std::size_t c = 0; c < src.size(); ++c) {
        auto s = src[c];
        std::size_t position = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1, ++position) {
          auto bit = rest & (~rest + 1);
          auto face = s & ~bit;
          auto it = row_of.find(face);
          if (it == row_of.end()) continue;  // lcm drops: coefficient is a nonunit
          mat[c][it->second] = position % 2 == 0 ? 1u : p - 1;
        }
      }
      rank_d[i] = dense_rank_modp(std::move(mat), p);
    }
    for (std::size_t i = 0; i <= q; ++i) {
      auto dim = by_size[i].size();
      if (dim == 0) continue;
      auto beta = dim - rank_d[i] - rank_d[i + 1];
      if (beta != 0) table.multigraded.push_back({i, m, beta});
    }
  }
  sort_entries(table.multigraded);
  return table;
}

std::size_t projective_dimension(const MonomialIdeal& I, FieldSpec field) { return betti_table(I, field).pd(); }

bool is_cohen_macaulay(const MonomialIdeal& I, FieldSpec field) {
  return projective_dimension(I, field) == ideal_height(I);
}

TaylorReport taylor_is_minimal(const MonomialIdeal& I) {
  const auto q = I.size();
  const auto& g = I.generators();
  TaylorReport report;
  if (q <= 20) {
    const std::uint32_t subsets = 1u << q;
    std::vector<Monomial> lcms(subsets);
    lcms[0] = Monomial(I.nvars());
    for (std::uint32_t s = 1; s < subsets; ++s)
      lcms[s] = lcm(lcms[s & (s - 1)], g[static_cast<std::size_t>(std::countr_zero(s))]);
    // Smallest witnesses first.
    for (std::size_t size = 2; size <= q; ++size)
      for (std::uint32_t s = 1; s < subsets; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
        for (std::size_t k = 0; k < q; ++k) {
          if (!(s >> k & 1u)) continue;
          if (lcms[s] == lcms[s & ~(1u << k)]) {
            report.is_minimal = false;
            for (std::size_t t = 0; t < q; ++t)
              if (s >> t & 1u) report.subset.push_back(t);
            report.omitted = k;
            return report;
          }
        }
      }
    return report;
  }
  // Any failing pair (sigma, p) persists after enlarging sigma to all generators.
  Monomial all(I.nvars());
  for (const auto& m : g) all = lcm(all, m);
  for (std::size_t k = 0; k < q; ++k) {
    Monomial rest(I.nvars());
    for (std::size_t t = 0; t < q; ++t)
      if (t != k) rest = lcm(rest, g[t]);
    if (rest == all) {
      report.is_minimal = false;
      for (std::size_t t = 0; t < q; ++t) report.subset.push_back(t);
      report.omitted = k;
      return report;
    }
  }
  return report;
}

bool has_unique_variable_powers(const MonomialIdeal& I) {
  const auto& g = I.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool found = false;
    for (std::size_t v = 0; v < I.nvars() && !found; ++v) {
      if (g[i][v] == 0) continue;
      found = std::all_of(g.begin(), g.end(), [&](const Monomial& h) { return &h == &g[i] || h[v] < g[i][v]; });
    }
    if (!found) return false;
  }
  return true;
}

bool BooleanEquivalence::consistent() const noexcept {
  return lattice_boolean == unique_variable_powers && unique_variable_powers == taylor_minimal &&
         taylor_minimal == pd_equals_generator_count;
}

BooleanEquivalence boolean_equivalence_report(const MonomialIdeal& I, FieldSpec field, bool enforce) {
  BooleanEquivalence r;
  r.lattice_boolean = is_boolean(lcm_lattice(I)).holds;
  r.unique_variable_powers = has_unique_variable_powers(I);
  r.taylor_minimal = taylor_is_minimal(I).is_minimal;
  r.pd_equals_generator_count = projective_dimension(I, field) == I.size();
  if (enforce && !r.consistent())
    throw Error(ErrorCode::EquivalenceViolation, "Boolean-lattice statements disagree on (" + I.to_string() + ")");
  return r;
}

PurityReport is_pure(const BettiTable& table) {
  PurityReport r;
  auto graded = table.graded();
  const auto pd = table.pd();
  r.pure = true;
  for (std::size_t i = 0; i <= pd; ++i) {
    std::vector<std::uint64_t> degrees;
    for (const auto& [key, rank] : graded)
      if (key.first == i && rank != 0) degrees.push_back(key.second);
    if (degrees.size() != 1) {
      r.pure = false;
      r.degrees.clear();
      return r;
    }
    r.degrees.push_back(degrees.front());
  }
  return r;
}

PurityReport is_pure(const MonomialIdeal& I, FieldSpec field) { return is_pure(betti_table(I, field)); }

std::vector<std::string> PdHeightReport::violations() const {
  std::vector<std::string> v;
  if (static_cast<int>(pd) > lattice_height) v.push_back("pd exceeds lattice height");
  if (lattice_geometric && !equal) v.push_back("geometric lattice with pd below height");
  if (lattice_lsm_coatomic && !equal) v.push_back("lower semimodular coatomic lattice with pd below height");
  if (equal && !lattice_strongly_complemented) v.push_back("pd equals height but lattice not strongly complemented");
  return v;
}

PdHeightReport pd_vs_height_report(const MonomialIdeal& I, FieldSpec field, bool enforce) {
  auto L = lcm_lattice(I);
  PdHeightReport r;
  r.pd = projective_dimension(I, field);
  r.lattice_height = height(L);
  r.equal = static_cast<int>(r.pd) == r.lattice_height;
  r.lattice_geometric = is_geometric(L).holds;
  r.lattice_lsm_coatomic = is_lower_semimodular(L).holds && is_coatomic(L).holds;
  r.lattice_strongly_complemented = is_strongly_complemented(L).holds;
  if (enforce) {
    auto v = r.violations();
    if (!v.empty()) throw Error(ErrorCode::ContractViolation, v.front() + " for (" + I.to_string() + ")");
  }
  return r;
}

}  // namespace lcmlat
