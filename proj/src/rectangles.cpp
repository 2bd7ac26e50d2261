#include "gridhom/rectangles.hpp"

#include <utility>

#include "gridhom/errors.hpp"

namespace gridhom {

namespace {

// Cyclic offset of v from base, in [0, n).
inline int offset(int v, int base, int n) noexcept {
  const int d = v - base;
  return d < 0 ? d + n : d;
}

struct Scan {
  bool empty;
  std::uint32_t o_hits;
  std::uint32_t x_hits;
};

// Walks the columns of the rectangle once. With stop_on_marker the scan gives
// up as soon as a blocked marker is seen (the caller discards the rectangle).
template <typename Points>
Scan scan(std::span<const int> o_rows, std::span<const int> x_rows, const Points& x, int left, int width, int bottom,
          int height, int n, bool block_o) {
  Scan s{true, 0, 0};
  for (int t = 0; t < width; ++t) {
    int k = left + t;
    if (k >= n) k -= n;
    const auto ku = static_cast<std::size_t>(k);
    if (t > 0) {
      const int off = offset(static_cast<int>(x[ku]), bottom, n);
      if (off > 0 && off < height) {
        s.empty = false;
        return s;
      }
    }
    if (offset(x_rows[ku], bottom, n) < height) {
      s.x_hits |= 1U << k;
      return s;
    }
    if (offset(o_rows[ku], bottom, n) < height) {
      s.o_hits |= 1U << k;
      if (block_o) return s;
    }
  }
  return s;
}

}  // namespace

Rectangle rectangle_between(const GridDiagram& d, std::span<const std::uint8_t> x, int left, int right) {
  const int n = d.size();
  if (n > 32) throw CapExceeded("rectangle masks support n <= 32");
  Rectangle r;
  r.left_column = left;
  r.right_column = right;
  r.bottom_row = x[static_cast<std::size_t>(left)];
  r.top_row = x[static_cast<std::size_t>(right)];
  r.width = offset(right, left, n);
  r.height = offset(r.top_row, r.bottom_row, n);
  for (int t = 0; t < r.width; ++t) {
    const int k = (left + t) % n;
    const auto ku = static_cast<std::size_t>(k);
    if (t > 0) {
      const int off = offset(x[ku], r.bottom_row, n);
      if (off > 0 && off < r.height) ++r.interior_points;
    }
    if (offset(d.row_of(Marker::O, k), r.bottom_row, n) < r.height) r.o_hits |= 1U << k;
    if (offset(d.row_of(Marker::X, k), r.bottom_row, n) < r.height) r.x_hits |= 1U << k;
  }
  r.empty = r.interior_points == 0;
  return r;
}

std::vector<Rectangle> rectangles(const GridDiagram& d, std::span<const std::uint8_t> x,
                                  std::span<const std::uint8_t> y) {
  const auto n = static_cast<std::size_t>(d.size());
  int first = -1, second = -1, differing = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) {
      ++differing;
      (first < 0 ? first : second) = static_cast<int>(i);
    }
  }
  if (differing != 2) return {};
  const auto a = static_cast<std::size_t>(first), b = static_cast<std::size_t>(second);
  if (x[a] != y[b] || x[b] != y[a]) return {};
  return {rectangle_between(d, x, first, second), rectangle_between(d, x, second, first)};
}

RectangleTable::RectangleTable(const GridDiagram& d, const GeneratorTable& gens, RectangleFilter filter)
    : filter_(filter) {
  const int n = d.size();
  const auto count = static_cast<long long>(gens.size());
  const bool block_o = filter == RectangleFilter::AvoidAllMarkers;
  const auto o_rows = d.o_rows();
  const auto x_rows = d.x_rows();

  // fill == nullptr: count only.
  auto visit = [&](std::size_t id, RectangleEdge* fill) {
    const auto& sigma = gens[id].sigma;
    std::size_t produced = 0;
    for (int left = 0; left < n; ++left) {
      for (int right = 0; right < n; ++right) {
        if (left == right) continue;
        const int bottom = sigma[static_cast<std::size_t>(left)];
        const int width = offset(right, left, n);
        const int height = offset(sigma[static_cast<std::size_t>(right)], bottom, n);
        const Scan s = scan(o_rows, x_rows, sigma, left, width, bottom, height, n, block_o);
        if (!s.empty || s.x_hits || (block_o && s.o_hits)) continue;
        if (fill) {
          Permutation y = sigma;
          std::swap(y[static_cast<std::size_t>(left)], y[static_cast<std::size_t>(right)]);
          fill[produced] = {gens.id_of(y), s.o_hits};
        }
        ++produced;
      }
    }
    return produced;
  };

  offsets_.assign(gens.size() + 1, 0);
#pragma omp parallel for schedule(static)
  for (long long id = 0; id < count; ++id) {
    offsets_[static_cast<std::size_t>(id) + 1] = visit(static_cast<std::size_t>(id), nullptr);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) offsets_[i + 1] += offsets_[i];
  edges_.resize(offsets_.back());
#pragma omp parallel for schedule(static)
  for (long long id = 0; id < count; ++id) {
    visit(static_cast<std::size_t>(id), edges_.data() + offsets_[static_cast<std::size_t>(id)]);
  }
}

}  // namespace gridhom
