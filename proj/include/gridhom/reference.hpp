#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridhom/grid.hpp"
#include "gridhom/poly.hpp"

// Serial, deliberately plain implementations kept as a cross-check for the
// parallel kernels and as the benchmark baseline.
namespace gridhom::reference {

// Rank over GF(2) of the matrix whose columns list their nonzero rows, by
// column reduction on the largest nonzero row index.
std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> columns);

// The J-formula evaluated on doubled coordinates: generator points at
// (2i, 2 sigma(i)), markers at (2c+1, 2r+1).
int maslov_literal(const GridDiagram& d, std::span<const int> sigma, Marker markers);

// Tilde homology ranks: std::next_permutation enumeration, pairwise rectangle
// search, sparse_rank per block. Exponential; meant for n <= 7.
BigradedRanks tilde_ranks(const GridDiagram& d);

}  // namespace gridhom::reference
