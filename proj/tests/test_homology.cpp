#include "doctest.h"

#include <random>

#include "lcmlat/error.hpp"
#include "lcmlat/homology.hpp"

using namespace lcmlat;

namespace {

using Faces = std::vector<std::vector<std::uint32_t>>;

/// Six-vertex triangulation of the real projective plane.
const Faces kRP2 = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

/// Dense Gaussian elimination mod p, used to cross-check the sparse rank.
std::size_t dense_rank(const SparseMatrix& m, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols, 0));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c]) a[r][c] = modp::reduce(v, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    auto inv = modp::inverse(a[rank][c], p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      auto f = modp::mul(a[r][c], inv, p);
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] = modp::sub(a[r][k], modp::mul(f, a[rank][k], p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::prime(2).characteristic == 2);
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(validate(FieldSpec{1}), Error);
  CHECK_NOTHROW(validate(FieldSpec::rationals()));
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK(modp::mul(modp::inverse(12345, 32003), 12345, 32003) == 1);
}

TEST_CASE("complex bookkeeping") {
  auto K = SimplicialComplexData::from_faces({{0, 1, 2}, {2, 3}});
  CHECK(K.dimension() == 2);
  CHECK(K.face_count(-1) == 1);
  CHECK(K.face_count(0) == 4);
  CHECK(K.face_count(1) == 4);
  CHECK(K.face_count(2) == 1);
  std::vector<std::uint32_t> e{1, 2};
  CHECK(K.find_face(e) != SimplicialComplexData::npos);
  std::vector<std::uint32_t> missing{1, 3};
  CHECK(K.find_face(missing) == SimplicialComplexData::npos);
  auto d1 = boundary_matrix(K, 1);
  CHECK(d1.rows == 4);
  CHECK(d1.cols == 4);
  // Each edge column has entries -1 and +1.
  for (const auto& col : d1.columns) {
    REQUIRE(col.size() == 2);
    CHECK(col[0].second + col[1].second == 0);
  }
}

TEST_CASE("reduced homology of standard spaces") {
  const auto q = FieldSpec::rationals();
  // The void complex {empty face} has reduced homology in dimension -1.
  CHECK(reduced_homology_ranks(SimplicialComplexData{}, q) == std::vector<std::size_t>{1});
  // A point is acyclic.
  CHECK(trimmed(reduced_homology_ranks(SimplicialComplexData::from_faces({{0}}), q)).empty());
  // Two points: one reduced class in dimension 0.
  CHECK(trimmed(reduced_homology_ranks(SimplicialComplexData::from_faces({{0}, {1}}), q)) ==
        std::vector<std::size_t>{0, 1});
  // Boundary of a triangle is a circle.
  CHECK(trimmed(reduced_homology_ranks(SimplicialComplexData::from_faces({{0, 1}, {1, 2}, {0, 2}}), q)) ==
        std::vector<std::size_t>{0, 0, 1});
  // Boundary of a tetrahedron is a 2-sphere.
  auto S2 = SimplicialComplexData::from_faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(trimmed(reduced_homology_ranks(S2, q)) == std::vector<std::size_t>{0, 0, 0, 1});
}

TEST_CASE("projective plane homology depends on the characteristic") {
  auto K = SimplicialComplexData::from_faces(kRP2);
  CHECK(trimmed(reduced_homology_ranks(K, FieldSpec::rationals())).empty());
  CHECK(trimmed(reduced_homology_ranks(K, FieldSpec::prime(3))).empty());
  CHECK(trimmed(reduced_homology_ranks(K, FieldSpec::prime(2))) == std::vector<std::size_t>{0, 0, 1, 1});
  auto confirmed = reduced_homology(K, FieldSpec::prime(2), true);
  CHECK(confirmed.ranks == reduced_homology_ranks(K, FieldSpec::prime(2)));
  CHECK_FALSE(confirmed.warnings.empty());
  auto clean = reduced_homology(K, FieldSpec::prime(32003), true);
  CHECK(clean.warnings.empty());
  CHECK(clean.char0_confirmed);
}

TEST_CASE("sparse rank agrees with dense elimination") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    SparseMatrix m;
    m.rows = 1 + rng() % 9;
    m.cols = 1 + rng() % 9;
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
      for (std::uint32_t r = 0; r < m.rows; ++r)
        if (rng() % 3 == 0) m.columns[c].emplace_back(r, static_cast<std::int64_t>(rng() % 7) - 3);
    for (auto& col : m.columns)
      col.erase(std::remove_if(col.begin(), col.end(), [](auto& e) { return e.second == 0; }), col.end());
    for (std::uint32_t p : {2u, 3u, 7u, 32003u}) REQUIRE(matrix_rank(m, FieldSpec::prime(p)) == dense_rank(m, p));
    // Over QQ the rank is at least the rank mod any prime.
    REQUIRE(matrix_rank(m, FieldSpec::rationals()) >= matrix_rank(m, FieldSpec::prime(2)));
    REQUIRE(matrix_rank(m, FieldSpec::rationals()) == matrix_rank(m, FieldSpec::prime(32003)));
  }
}
