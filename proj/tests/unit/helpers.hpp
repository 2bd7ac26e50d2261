#pragma once

#include <vector>

#include "gridhom/builtins.hpp"
#include "gridhom/grid.hpp"
#include "gridhom/moves.hpp"

namespace testutil {

inline const gridhom::GridDiagram& builtin(const char* name) { return gridhom::find_builtin(name)->diagram; }

inline gridhom::GridDiagram g1() { return {{0}, {0}}; }
inline gridhom::GridDiagram g2() { return {{1, 0}, {0, 1}}; }
inline gridhom::GridDiagram g3() { return {{2, 0, 1}, {1, 2, 0}}; }
inline gridhom::GridDiagram trefoil() { return {{2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}}; }

// Seeded random knot grids with n cycling over [lo, hi].
inline std::vector<gridhom::GridDiagram> random_knots(int count, int lo, int hi, std::uint64_t seed) {
  std::vector<gridhom::GridDiagram> out;
  for (int i = 0; i < count; ++i) out.push_back(gridhom::random_grid(lo + i % (hi - lo + 1), seed + 977 * i));
  return out;
}

inline bool equal_up_to_translation(const gridhom::GridDiagram& a, const gridhom::GridDiagram& b) {
  if (a.size() != b.size()) return false;
  for (int dc = 0; dc < a.size(); ++dc) {
    for (int dr = 0; dr < a.size(); ++dr) {
      if (gridhom::translate(a, dc, dr) == b) return true;
    }
  }
  return false;
}

}  // namespace testutil
