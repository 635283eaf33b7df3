#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcmlat/field.hpp"

namespace lcmlat {

/**
 * A finite abstract simplicial complex on local vertices 0..k-1.
 *
 * Faces of dimension d are stored flattened with stride d+1, each face a
 * strictly increasing vertex list, the list of faces lexicographically sorted
 * and duplicate-free. faces_by_dim[d+1] holds dimension d, so index 0 is the
 * empty face, which is always present.
 */
struct SimplicialComplexData {
  /// External label of each local vertex (for order complexes: lattice element ids).
  std::vector<std::uint32_t> vertices;
  std::vector<std::vector<std::uint32_t>> faces_by_dim{std::vector<std::uint32_t>{}};
  std::vector<std::size_t> counts{1};

  /// Highest dimension with a face; -1 for the complex {empty face}.
  int dimension() const noexcept { return static_cast<int>(counts.size()) - 2; }
  std::size_t face_count(int dim) const noexcept;
  std::span<const std::uint32_t> face(int dim, std::size_t i) const;
  /// Index of a face in its dimension's list, or npos.
  std::size_t find_face(std::span<const std::uint32_t> face) const;

  /// Appends a face; callers must add faces in lexicographic order per dimension.
  void push_face(std::span<const std::uint32_t> face);

  /// Subset closure of the given faces over vertices 0..max.
  static SimplicialComplexData from_faces(const std::vector<std::vector<std::uint32_t>>& faces);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Sparse integer matrix stored by columns; each column sorted by row index.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  std::int64_t at(std::size_t row, std::size_t col) const;
};

/// Simplicial boundary map from d-faces to (d-1)-faces. d = 0 is the augmentation.
SparseMatrix boundary_matrix(const SimplicialComplexData& complex, int d);

/// Exact rank over the given field (sparse elimination, Markowitz pivot choice).
std::size_t matrix_rank(const SparseMatrix& m, FieldSpec field);

/// Reduced homology ranks; element k is the rank in dimension k-1.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplexData& complex, FieldSpec field);

struct HomologyRanks {
  std::vector<std::size_t> ranks;
  FieldSpec field;
  bool char0_confirmed = false;
  std::vector<std::string> warnings;
};

/// Below this many columns per boundary map the prime-field result is re-derived over QQ.
inline constexpr std::size_t kChar0ConfirmColumns = 5000;

/**
 * Ranks over `field`; when the field is prime and `confirm_char0` is set and
 * every boundary map is small enough, the result is cross-checked over QQ. A
 * disagreement is reported as a warning (the requested field's ranks are kept).
 */
HomologyRanks reduced_homology(const SimplicialComplexData& complex, FieldSpec field, bool confirm_char0);

}  // namespace lcmlat
