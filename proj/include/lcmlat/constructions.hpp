#pragma once

#include <cstdint>

#include "lcmlat/lattice.hpp"

namespace lcmlat {

/// Number of subspaces of F_q^r (sum of Gaussian binomials).
std::uint64_t subspace_count(std::uint32_t q, std::uint32_t r);

/**
 * Subspaces of F_q^r ordered by inclusion, enumerated from reduced row-echelon
 * bases. Elements are grouped by dimension, so 0 is the zero space and the
 * last element is the whole space. q must be prime.
 */
FiniteLattice subspace_lattice(std::uint32_t q, std::uint32_t r);

/// Bottom 0, pairwise incomparable atoms 1..n, top n+1.
FiniteLattice mn_lattice(std::size_t n);

/**
 * Incidence lattice of the Fano plane: 0 bottom, 1..7 points a..g, 8..14 lines
 * carrying variables x1..x7 under phan_ideal, 15 top.
 */
FiniteLattice fano_lattice();

/// Lattice of flats of the graphic matroid of the diamond graph: 0 empty,
/// 1..5 edges, then flats 123, 14, 24, 15, 25, 345, and 12 the full edge set.
FiniteLattice graphic_matroid_lattice();

}  // namespace lcmlat
