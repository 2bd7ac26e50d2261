#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gridhom/grid.hpp"

namespace gridhom {

// Swap columns `column` and `column + 1 (mod n)`.
struct ColumnCommute {
  int column;
  friend bool operator==(const ColumnCommute&, const ColumnCommute&) = default;
};

// Swap rows `row` and `row + 1 (mod n)`.
struct RowCommute {
  int row;
  friend bool operator==(const RowCommute&, const RowCommute&) = default;
};

enum class Corner { NW, NE, SW, SE };

// Split the row and column of the `marker` in `column` into a 2x2 block
// occupying new columns column, column+1 and new rows r, r+1, where r is the
// marker's row. `corner` names the unmarked cell of the block. See
// docs/stabilization.md for the full placement table.
struct Stabilize {
  Marker marker;
  int column;
  Corner corner;
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};

// Inverse of a stabilization whose 2x2 block occupies columns column and
// column+1 (no wrap-around).
struct Destabilize {
  int column;
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};

using GridMove = std::variant<ColumnCommute, RowCommute, Stabilize, Destabilize>;

std::string to_string(const GridMove& m);
std::string to_string(Corner c);
Corner parse_corner(const std::string& s);

// Legal iff the closed planar row intervals spanned by the two columns' O and
// X are disjoint, or one lies in the open interior of the other. Sharing an
// endpoint is illegal.
bool commutation_legal(const GridDiagram& d, const ColumnCommute& m);
bool commutation_legal(const GridDiagram& d, const RowCommute& m);
bool destabilization_legal(const GridDiagram& d, const Destabilize& m);

// Throws IllegalMove on a failed precondition or an out-of-range index.
GridDiagram apply_move(const GridDiagram& d, const GridMove& m);

struct MoveBounds {
  int min_n = 2;  // destabilizations below this size are not offered
  int max_n = 7;  // stabilizations above this size are not offered
};

// Every legal move of d within the bounds, in a fixed order: column
// commutations, row commutations, stabilizations (marker, column, corner), then
// destabilizations.
std::vector<GridMove> legal_moves(const GridDiagram& d, const MoveBounds& bounds = {});

// Random single-component grid of size n >= 2 with no coincident cells.
// Deterministic in (n, seed). Throws Error after max_attempts rejected draws.
GridDiagram random_grid(int n, std::uint64_t seed, int max_attempts = 100000);

struct MoveSequence {
  GridDiagram result;
  std::vector<GridMove> moves;
};

// Applies k moves, each drawn uniformly from legal_moves() of the current
// diagram. Deterministic in (d, k, seed, bounds).
MoveSequence random_moves(const GridDiagram& d, int k, std::uint64_t seed, const MoveBounds& bounds = {});

}  // namespace gridhom
