#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridhom/moves.hpp"
#include "gridhom/report.hpp"
#include "json.hpp"

namespace gridhom {

struct FuzzOptions {
  int n = 4;
  int moves = 10;
  int trials = 25;
  std::uint64_t seed = 1;
  MoveBounds bounds;
  ComputeOptions compute;
};

struct FuzzTrial {
  int index = 0;
  GridDiagram start{{0}, {0}};
  GridDiagram end{{0}, {0}};
  std::vector<GridMove> moves;
  bool passed = false;
  std::string failure;  // first mismatch or error, empty when passed
  // Hat polynomial and invariants of the start diagram (when computed).
  PoincarePolynomial hat;
  KnotInvariants invariants;
};

struct FuzzSummary {
  std::vector<FuzzTrial> trials;  // in trial order
  bool passed() const;
  nlohmann::json to_json() const;
};

// Random knot grids, each pushed through random legal moves; the hat
// polynomial, tau, genus and Alexander polynomial must agree at both ends.
// Trials run in parallel; the outcome depends only on the options.
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace gridhom
