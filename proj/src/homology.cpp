#include "lcmlat/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "lcmlat/error.hpp"

namespace lcmlat {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  FieldSpec f{p};
  if (!is_prime(p)) throw Error(ErrorCode::BadParameter, "characteristic " + std::to_string(p) + " is not prime");
  return f;
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("QQ") : "ZZ/" + std::to_string(characteristic);
}

void validate(const FieldSpec& field) {
  if (!field.is_rational() && !is_prime(field.characteristic))
    throw Error(ErrorCode::BadParameter, "characteristic " + std::to_string(field.characteristic) + " is not prime");
}

namespace modp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    auto q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorCode::BadParameter, "element not invertible mod p");
  return reduce(t, p);
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Simplicial complexes

std::size_t SimplicialComplexData::face_count(int dim) const noexcept {
  auto k = static_cast<std::size_t>(dim + 1);
  return (dim < -1 || k >= counts.size()) ? 0 : counts[k];
}

std::span<const std::uint32_t> SimplicialComplexData::face(int dim, std::size_t i) const {
  auto stride = static_cast<std::size_t>(dim + 1);
  const auto& flat = faces_by_dim.at(stride);
  return {flat.data() + i * stride, stride};
}

std::size_t SimplicialComplexData::find_face(std::span<const std::uint32_t> f) const {
  auto stride = f.size();
  if (stride >= counts.size()) return npos;
  if (stride == 0) return 0;
  const auto& flat = faces_by_dim[stride];
  std::size_t lo = 0, hi = counts[stride];
  while (lo < hi) {
    auto mid = (lo + hi) / 2;
    const auto* p = flat.data() + mid * stride;
    if (std::lexicographical_compare(p, p + stride, f.begin(), f.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < counts[stride] && std::equal(f.begin(), f.end(), flat.data() + lo * stride)) return lo;
  return npos;
}

void SimplicialComplexData::push_face(std::span<const std::uint32_t> f) {
  auto k = f.size();
  if (k == 0) return;  // the empty face is implicit
  while (faces_by_dim.size() <= k) {
    faces_by_dim.emplace_back();
    counts.push_back(0);
  }
  faces_by_dim[k].insert(faces_by_dim[k].end(), f.begin(), f.end());
  ++counts[k];
}

SimplicialComplexData SimplicialComplexData::from_faces(const std::vector<std::vector<std::uint32_t>>& faces) {
  std::set<std::vector<std::uint32_t>> all;
  std::uint32_t max_vertex = 0;
  bool any_vertex = false;
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() > 24) throw Error(ErrorCode::TooLarge, "face too large for subset closure");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask) {
      std::vector<std::uint32_t> sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) sub.push_back(f[i]);
      all.insert(std::move(sub));
    }
    if (!f.empty()) {
      max_vertex = std::max(max_vertex, f.back());
      any_vertex = true;
    }
  }
  std::vector<std::vector<std::uint32_t>> sorted(all.begin(), all.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  SimplicialComplexData k;
  if (any_vertex)
    for (std::uint32_t v = 0; v <= max_vertex; ++v) k.vertices.push_back(v);
  for (const auto& f : sorted) k.push_face(f);
  return k;
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : columns.at(col))
    if (r == row) return v;
  return 0;
}

SparseMatrix boundary_matrix(const SimplicialComplexData& complex, int d) {
  if (d < 0) throw Error(ErrorCode::BadParameter, "boundary dimension must be >= 0");
  SparseMatrix m;
  m.rows = complex.face_count(d - 1);
  m.cols = complex.face_count(d);
  m.columns.resize(m.cols);
  std::vector<std::uint32_t> sub(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < m.cols; ++j) {
    auto f = complex.face(d, j);
    auto& col = m.columns[j];
    col.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != k) sub[w++] = f[t];
      auto row = complex.find_face(sub);
      if (row == SimplicialComplexData::npos)
        throw Error(ErrorCode::BadParameter, "complex is not closed under taking subsets");
      col.emplace_back(static_cast<std::uint32_t>(row), (k % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

// ---------------------------------------------------------------------------
// Rank by sparse elimination.
//
// The vectors (matrix columns) are eliminated one at a time. Each step takes
// the shortest active vector and, inside it, the coordinate held by the fewest
// other vectors: the Markowitz cost (r-1)(c-1) restricted to that row. The
// chosen coordinate is then cleared from every other vector holding it.

namespace {

using BigInt = boost::multiprecision::cpp_int;

template <class V>
using SparseVec = std::vector<std::pair<std::uint32_t, V>>;

struct ModPOps {
  std::uint32_t p;
  using Value = std::uint32_t;
  Value convert(std::int64_t x) const { return modp::reduce(x, p); }
  bool is_zero(const Value& v) const { return v == 0; }
  // target := target - (t/pv) * pivot
  void eliminate(SparseVec<Value>& target, const Value& t, const SparseVec<Value>& pivot, const Value& pv,
                 SparseVec<Value>& out) const {
    Value f = modp::mul(t, modp::inverse(pv, p), p);
    merge(target, pivot, out, [&](Value a) { return a; }, [&](Value a, Value b) { return modp::sub(a, modp::mul(f, b, p), p); },
          [&](Value b) { return modp::sub(0, modp::mul(f, b, p), p); });
  }
  void normalize(SparseVec<Value>&) const {}

  template <class KeepA, class Both, class OnlyB>
  static void merge(const SparseVec<Value>& a, const SparseVec<Value>& b, SparseVec<Value>& out, KeepA keep_a, Both both,
                    OnlyB only_b) {
    out.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.emplace_back(a[i].first, keep_a(a[i].second));
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        auto v = only_b(b[j].second);
        if (v != 0) out.emplace_back(b[j].first, v);
        ++j;
      } else {
        auto v = both(a[i].second, b[j].second);
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
  }
};

struct IntegerOps {
  using Value = BigInt;
  Value convert(std::int64_t x) const { return Value(x); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  // Fraction-free: target := pv * target - t * pivot
  void eliminate(SparseVec<Value>& target, const Value& t, const SparseVec<Value>& pivot, const Value& pv,
                 SparseVec<Value>& out) const {
    out.clear();
    std::size_t i = 0, j = 0;
    const auto& a = target;
    const auto& b = pivot;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.emplace_back(a[i].first, pv * a[i].second);
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -t * b[j].second);
        ++j;
      } else {
        Value v = pv * a[i].second - t * b[j].second;
        if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    normalize(out);
  }
  void normalize(SparseVec<Value>& v) const {
    if (v.empty()) return;
    Value g = 0;
    for (const auto& e : v) {
      g = boost::multiprecision::gcd(g, e.second);
      if (g == 1) return;
    }
    if (g < 0) g = -g;
    if (g > 1)
      for (auto& e : v) e.second /= g;
  }
};

template <class Ops>
std::size_t eliminate_rank(const SparseMatrix& m, const Ops& ops) {
  using Value = typename Ops::Value;
  const std::size_t n = m.cols;
  std::vector<SparseVec<Value>> vecs(n);
  std::vector<std::uint32_t> count(m.rows, 0);
  std::vector<std::vector<std::uint32_t>> occ(m.rows);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [r, v] : m.columns[j]) {
      auto val = ops.convert(v);
      if (ops.is_zero(val)) continue;
      vecs[j].emplace_back(r, std::move(val));
      ++count[r];
      occ[r].push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::vector<char> active(n, 0);
  std::set<std::pair<std::size_t, std::uint32_t>> queue;
  for (std::size_t j = 0; j < n; ++j) {
    if (vecs[j].empty()) continue;
    active[j] = 1;
    queue.emplace(vecs[j].size(), static_cast<std::uint32_t>(j));
  }
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t epoch = 0;
  SparseVec<Value> scratch;
  std::size_t rank = 0;

  auto value_at = [](const SparseVec<Value>& v, std::uint32_t idx) -> const Value* {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return (it != v.end() && it->first == idx) ? &it->second : nullptr;
  };

  while (!queue.empty()) {
    auto v = queue.begin()->second;
    queue.erase(queue.begin());
    auto& pivot_vec = vecs[v];
    std::uint32_t best = pivot_vec.front().first;
    for (const auto& e : pivot_vec)
      if (count[e.first] < count[best]) best = e.first;
    const Value pv = *value_at(pivot_vec, best);

    ++epoch;
    seen[v] = epoch;
    for (auto w : occ[best]) {
      if (!active[w] || seen[w] == epoch) continue;
      seen[w] = epoch;
      const Value* tw = value_at(vecs[w], best);
      if (tw == nullptr) continue;
      queue.erase({vecs[w].size(), w});
      const Value t = *tw;
      auto& target = vecs[w];
      ops.eliminate(target, t, pivot_vec, pv, scratch);
      // Count bookkeeping: diff old support against new support.
      std::size_t i = 0, k = 0;
      while (i < target.size() || k < scratch.size()) {
        if (k == scratch.size() || (i < target.size() && target[i].first < scratch[k].first)) {
          --count[target[i].first];
          ++i;
        } else if (i == target.size() || scratch[k].first < target[i].first) {
          ++count[scratch[k].first];
          occ[scratch[k].first].push_back(w);
          ++k;
        } else {
          ++i;
          ++k;
        }
      }
      target.swap(scratch);
      if (target.empty())
        active[w] = 0;
      else
        queue.emplace(target.size(), w);
    }
    for (const auto& e : pivot_vec) --count[e.first];
    active[v] = 0;
    SparseVec<Value>().swap(pivot_vec);
    std::vector<std::uint32_t>().swap(occ[best]);
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const SparseMatrix& m, FieldSpec field) {
  validate(field);
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rational()) return eliminate_rank(m, IntegerOps{});
  return eliminate_rank(m, ModPOps{field.characteristic});
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplexData& complex, FieldSpec field) {
  validate(field);
  const int top = complex.dimension();
  // boundary_rank[d] = rank of the map from d-faces to (d-1)-faces, d = 0..top+1
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 2), 0);
  for (int d = 0; d <= top; ++d) boundary_rank[d] = matrix_rank(boundary_matrix(complex, d), field);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = -1; d <= top; ++d) {
    std::size_t below = d >= 0 ? boundary_rank[d] : 0;
    std::size_t above = (d + 1 <= top) ? boundary_rank[d + 1] : 0;
    ranks[d + 1] = complex.face_count(d) - below - above;
  }
  return ranks;
}

HomologyRanks reduced_homology(const SimplicialComplexData& complex, FieldSpec field, bool confirm_char0) {
  HomologyRanks out;
  out.field = field;
  out.ranks = reduced_homology_ranks(complex, field);
  if (!field.is_rational() && confirm_char0) {
    bool small = true;
    for (int d = 0; d <= complex.dimension(); ++d)
      if (complex.face_count(d) >= kChar0ConfirmColumns) small = false;
    if (small) {
      auto exact = reduced_homology_ranks(complex, FieldSpec::rationals());
      out.char0_confirmed = true;
      if (exact != out.ranks) {
        out.char0_confirmed = false;
        out.warnings.push_back("reduced homology over " + field.name() + " differs from QQ (torsion in integral homology)");
      }
    }
  }
  return out;
}

}  // namespace lcmlat
