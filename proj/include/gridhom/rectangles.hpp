#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridhom/generators.hpp"
#include "gridhom/grid.hpp"

namespace gridhom {

// A rectangle on the torus from generator x to generator y. Its south-west
// and north-east corners are points of x, its north-west and south-east
// corners points of y. It covers the `width` columns starting at
// left_column and the `height` rows starting at bottom_row, cyclically.
struct Rectangle {
  int left_column = 0;
  int right_column = 0;
  int bottom_row = 0;
  int top_row = 0;
  int width = 0;
  int height = 0;
  std::uint32_t o_hits = 0;  // bit k: the O of column k is inside
  std::uint32_t x_hits = 0;  // bit k: the X of column k is inside
  int interior_points = 0;   // points of x strictly inside
  bool empty = false;        // interior_points == 0
};

// Rectangle spanned from the x-point in column `left` to the x-point in
// column `right`, moving right and up.
Rectangle rectangle_between(const GridDiagram& d, std::span<const std::uint8_t> x, int left, int right);

// Both rectangles from x to y when they differ in exactly two columns (with
// the two rows exchanged), otherwise none.
std::vector<Rectangle> rectangles(const GridDiagram& d, std::span<const std::uint8_t> x,
                                  std::span<const std::uint8_t> y);

enum class RectangleFilter {
  AvoidAllMarkers,  // tilde: no O and no X inside
  AvoidX,           // minus: O's allowed and recorded, no X inside
};

struct RectangleEdge {
  std::uint32_t target;
  std::uint32_t o_hits;
};

// Empty rectangles out of every generator that pass the filter, stored as a
// compressed adjacency list. Built in two parallel passes (count, fill).
class RectangleTable {
 public:
  RectangleTable(const GridDiagram& d, const GeneratorTable& gens, RectangleFilter filter);

  std::span<const RectangleEdge> out(std::size_t generator) const noexcept {
    return {edges_.data() + offsets_[generator], offsets_[generator + 1] - offsets_[generator]};
  }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  RectangleFilter filter() const noexcept { return filter_; }

 private:
  RectangleFilter filter_;
  std::vector<std::size_t> offsets_;
  std::vector<RectangleEdge> edges_;
};

}  // namespace gridhom
