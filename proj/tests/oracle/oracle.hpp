#pragma once

// Brute-force oracles for the tests. Everything here is written from the
// definitions with no shared code from the library beyond GridDiagram.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "gridhom/grid.hpp"

namespace oracle {

struct PointD {
  double x, y;
};

inline int count_i(const std::vector<PointD>& a, const std::vector<PointD>& b) {
  int c = 0;
  for (const auto& p : a) {
    for (const auto& q : b) c += (p.x < q.x && p.y < q.y);
  }
  return c;
}

// M = J(x,x) - 2J(x,M) + J(M,M) + 1 with half-integer marker coordinates.
inline int maslov(const gridhom::GridDiagram& d, const std::vector<int>& sigma, gridhom::Marker m) {
  std::vector<PointD> x, mk;
  for (int i = 0; i < d.size(); ++i) {
    x.push_back({double(i), double(sigma[std::size_t(i)])});
    mk.push_back({i + 0.5, d.row_of(m, i) + 0.5});
  }
  auto j = [](const auto& a, const auto& b) { return 0.5 * (count_i(a, b) + count_i(b, a)); };
  return int(j(x, x) - 2 * j(x, mk) + j(mk, mk) + 1);
}

inline int alexander(const gridhom::GridDiagram& d, const std::vector<int>& sigma) {
  return (maslov(d, sigma, gridhom::Marker::O) - maslov(d, sigma, gridhom::Marker::X) - (d.size() - 1)) / 2;
}

// A torus rectangle unrolled into the plane: SW corner at lattice point
// (c0, r0), NE corner at (c0 + w, r0 + h). Lattice coordinates are tested
// after shifting by multiples of n into that window.
struct Unwrapped {
  int c0, r0, w, h;
};

inline bool strictly_inside_point(const Unwrapped& u, int n, int px, int py) {
  for (int sx = 0; sx <= 1; ++sx) {
    for (int sy = 0; sy <= 1; ++sy) {
      const int x = px + sx * n, y = py + sy * n;
      if (x > u.c0 && x < u.c0 + u.w && y > u.r0 && y < u.r0 + u.h) return true;
    }
  }
  return false;
}

inline bool contains_cell(const Unwrapped& u, int n, int cx, int cy) {
  for (int sx = 0; sx <= 1; ++sx) {
    for (int sy = 0; sy <= 1; ++sy) {
      const double x = cx + 0.5 + sx * n, y = cy + 0.5 + sy * n;
      if (x > u.c0 && x < u.c0 + u.w && y > u.r0 && y < u.r0 + u.h) return true;
    }
  }
  return false;
}

struct Rect {
  int left, right;
  int o_count, x_count, interior;
};

// All rectangles from x to y.
inline std::vector<Rect> rectangles(const gridhom::GridDiagram& d, const std::vector<int>& x,
                                    const std::vector<int>& y) {
  const int n = d.size();
  std::vector<int> diff;
  for (int i = 0; i < n; ++i) {
    if (x[std::size_t(i)] != y[std::size_t(i)]) diff.push_back(i);
  }
  std::vector<Rect> out;
  if (diff.size() != 2) return out;
  for (int k = 0; k < 2; ++k) {
    const int a = diff[std::size_t(k)], b = diff[std::size_t(1 - k)];
    Unwrapped u{a, x[std::size_t(a)], b > a ? b - a : b - a + n, 0};
    u.h = x[std::size_t(b)] > u.r0 ? x[std::size_t(b)] - u.r0 : x[std::size_t(b)] - u.r0 + n;
    Rect r{a, b, 0, 0, 0};
    for (int c = 0; c < n; ++c) {
      r.o_count += contains_cell(u, n, c, d.row_of(gridhom::Marker::O, c));
      r.x_count += contains_cell(u, n, c, d.row_of(gridhom::Marker::X, c));
      r.interior += strictly_inside_point(u, n, c, x[std::size_t(c)]);
    }
    out.push_back(r);
  }
  return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Generator sum divided by (1 - t^-1)^(n-1) by repeated synthetic division
// from the top exponent down; returns exponent -> coefficient.
inline std::map<int, long long> alexander_quotient(const gridhom::GridDiagram& d) {
  std::map<int, long long> p;
  for (const auto& s : permutations(d.size())) {
    const int m = maslov(d, s, gridhom::Marker::O);
    p[alexander(d, s)] += (m % 2 == 0) ? 1 : -1;
  }
  for (int step = 0; step + 1 < d.size(); ++step) {
    // p = q (1 - t^-1): q_top = p_top, q_{k-1} = p_{k-1} + q_k
    std::map<int, long long> q;
    if (p.empty()) break;
    const int top = p.rbegin()->first, low = p.begin()->first;
    long long carry = 0;
    for (int k = top; k > low; --k) {
      carry += p.count(k) ? p[k] : 0;
      if (carry) q[k] = carry;
    }
    carry += p.count(low) ? p[low] : 0;
    if (carry != 0) return {};  // inexact
    p = q;
  }
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

// GF(2) rank of a dense 0/1 matrix by plain elimination.
inline std::size_t rank(std::vector<std::vector<std::uint8_t>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
