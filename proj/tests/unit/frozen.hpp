#pragma once

// Bigraded ranks computed by the independent Python oracle in
// tests/oracle/grid_oracle.py and frozen here.

#include <initializer_list>
#include <tuple>

#include "gridhom/poly.hpp"

namespace frozen {

inline gridhom::PoincarePolynomial poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  gridhom::PoincarePolynomial p;
  for (const auto& [m, a, r] : terms) p.add({m, a}, r);
  return p;
}

inline gridhom::PoincarePolynomial trefoil_tilde() {
  return poly({{2, 1, 1}, {1, 0, 5}, {0, -1, 11}, {-1, -2, 14}, {-2, -3, 11}, {-3, -4, 5}, {-4, -5, 1}});
}
inline gridhom::PoincarePolynomial trefoil_hat() { return poly({{2, 1, 1}, {1, 0, 1}, {0, -1, 1}}); }
inline gridhom::PoincarePolynomial trefoil_rh_hat() { return poly({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 1}}); }

inline gridhom::PoincarePolynomial figure_eight_tilde() {
  return poly({{1, 1, 1}, {0, 0, 8}, {-1, -1, 26}, {-2, -2, 45}, {-3, -3, 45}, {-4, -4, 26}, {-5, -5, 8}, {-6, -6, 1}});
}
inline gridhom::PoincarePolynomial figure_eight_hat() { return poly({{1, 1, 1}, {0, 0, 3}, {-1, -1, 1}}); }

inline gridhom::PoincarePolynomial unknot2_tilde() { return poly({{0, 0, 1}, {-1, -1, 1}}); }
inline gridhom::PoincarePolynomial unknot3_tilde() { return poly({{0, 0, 1}, {-1, -1, 2}, {-2, -2, 1}}); }

}  // namespace frozen
