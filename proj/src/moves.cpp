#include "gridhom/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>

#include "gridhom/errors.hpp"
#include "gridhom/random.hpp"

namespace gridhom {

namespace {

struct Interval {
  int lo;
  int hi;
};

Interval span_of(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool intervals_commute(Interval p, Interval q) {
  const bool disjoint = p.hi < q.lo || q.hi < p.lo;
  const bool nested = (p.lo < q.lo && q.hi < p.hi) || (q.lo < p.lo && p.hi < q.hi);
  return disjoint || nested;
}

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw IllegalMove(std::string(what) + " index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  }
}

std::vector<int> copy_rows(std::span<const int> s) { return {s.begin(), s.end()}; }

// A destabilization candidate: the column that disappears, the row that is
// merged away, and the row it merges into.
struct Collapse {
  int removed_column;
  int kept_column;
  int removed_row;
  int kept_row;
  Marker doubled;  // marker type that appears twice in the 2x2 block
};

std::optional<Collapse> find_collapse(const GridDiagram& d, int column) {
  const int n = d.size();
  if (n < 2 || column < 0 || column + 1 >= n) return std::nullopt;
  for (const int oc : {column + 1, column}) {
    const int uc = oc == column ? column + 1 : column;
    const int ro = d.row_of(Marker::O, oc);
    const int rx = d.row_of(Marker::X, oc);
    if (std::abs(ro - rx) != 1) continue;
    // The doubled type T sits at (oc, kept_row) and at (uc, removed_row); the
    // other type sits at (oc, removed_row).
    for (const Marker t : {Marker::X, Marker::O}) {
      const int kept = d.row_of(t, oc);
      const int removed = d.row_of(other(t), oc);
      if (d.row_of(t, uc) == removed) return Collapse{oc, uc, removed, kept, t};
    }
  }
  return std::nullopt;
}

GridDiagram stabilize(const GridDiagram& d, const Stabilize& m) {
  const int n = d.size();
  check_index(m.column, n, "stabilization column");
  const Marker t = m.marker;
  const Marker f = other(t);
  const int i = m.column;
  const int r = d.row_of(t, i);

  const int left = i, right = i + 1, bottom = r, top = r + 1;
  const bool unmarked_left = m.corner == Corner::NW || m.corner == Corner::SW;
  const bool unmarked_bottom = m.corner == Corner::SW || m.corner == Corner::SE;
  const int uc = unmarked_left ? left : right;
  const int oc = unmarked_left ? right : left;
  const int ur = unmarked_bottom ? bottom : top;
  const int orow = unmarked_bottom ? top : bottom;

  auto col_map = [i](int k) { return k < i ? k : k + 1; };
  auto row_map = [r](int rho) { return rho < r ? rho : rho + 1; };

  std::vector<int> tr(static_cast<std::size_t>(n + 1)), fr(static_cast<std::size_t>(n + 1));
  for (int k = 0; k < n; ++k) {
    if (k == i) continue;
    const auto nk = static_cast<std::size_t>(col_map(k));
    tr[nk] = row_map(d.row_of(t, k));
    const int fk = d.row_of(f, k);
    fr[nk] = fk == r ? ur : row_map(fk);
  }
  const int fi = d.row_of(f, i);
  tr[static_cast<std::size_t>(uc)] = orow;
  fr[static_cast<std::size_t>(uc)] = fi == r ? ur : row_map(fi);
  tr[static_cast<std::size_t>(oc)] = ur;
  fr[static_cast<std::size_t>(oc)] = orow;

  return t == Marker::O ? GridDiagram(std::move(tr), std::move(fr)) : GridDiagram(std::move(fr), std::move(tr));
}

GridDiagram destabilize(const GridDiagram& d, const Destabilize& m) {
  const int n = d.size();
  check_index(m.column, n, "destabilization column");
  const auto c = find_collapse(d, m.column);
  if (!c) {
    throw IllegalMove("columns " + std::to_string(m.column) + " and " + std::to_string(m.column + 1) +
                      " do not form a destabilizable 2x2 block");
  }
  auto row_after = [&](int rho) { return rho > c->removed_row ? rho - 1 : rho; };
  std::vector<int> o, x;
  o.reserve(static_cast<std::size_t>(n - 1));
  x.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n; ++k) {
    if (k == c->removed_column) continue;
    int ro = d.row_of(Marker::O, k);
    int rx = d.row_of(Marker::X, k);
    if (k == c->kept_column) {
      (c->doubled == Marker::O ? ro : rx) = c->kept_row;
    }
    o.push_back(row_after(ro));
    x.push_back(row_after(rx));
  }
  return GridDiagram(std::move(o), std::move(x));
}

}  // namespace

std::string to_string(Corner c) {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
  }
  return "?";
}

Corner parse_corner(const std::string& s) {
  if (s == "NW" || s == "nw") return Corner::NW;
  if (s == "NE" || s == "ne") return Corner::NE;
  if (s == "SW" || s == "sw") return Corner::SW;
  if (s == "SE" || s == "se") return Corner::SE;
  throw ParseError("unknown corner '" + s + "' (expected NW, NE, SW or SE)");
}

std::string to_string(const GridMove& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ColumnCommute>) {
          return "commute-columns " + std::to_string(v.column);
        } else if constexpr (std::is_same_v<T, RowCommute>) {
          return "commute-rows " + std::to_string(v.row);
        } else if constexpr (std::is_same_v<T, Stabilize>) {
          return std::string("stabilize ") + marker_char(v.marker) + ":" + to_string(v.corner) + " column " +
                 std::to_string(v.column);
        } else {
          return "destabilize column " + std::to_string(v.column);
        }
      },
      m);
}

bool commutation_legal(const GridDiagram& d, const ColumnCommute& m) {
  const int n = d.size();
  if (n < 2 || m.column < 0 || m.column >= n) return false;
  const int a = m.column, b = (m.column + 1) % n;
  return intervals_commute(span_of(d.row_of(Marker::O, a), d.row_of(Marker::X, a)),
                           span_of(d.row_of(Marker::O, b), d.row_of(Marker::X, b)));
}

bool commutation_legal(const GridDiagram& d, const RowCommute& m) {
  const int n = d.size();
  if (n < 2 || m.row < 0 || m.row >= n) return false;
  const int a = m.row, b = (m.row + 1) % n;
  return intervals_commute(span_of(d.column_of(Marker::O, a), d.column_of(Marker::X, a)),
                           span_of(d.column_of(Marker::O, b), d.column_of(Marker::X, b)));
}

bool destabilization_legal(const GridDiagram& d, const Destabilize& m) {
  return find_collapse(d, m.column).has_value();
}

GridDiagram apply_move(const GridDiagram& d, const GridMove& m) {
  const int n = d.size();
  if (const auto* cc = std::get_if<ColumnCommute>(&m)) {
    check_index(cc->column, n, "column");
    if (!commutation_legal(d, *cc)) {
      throw IllegalMove("columns " + std::to_string(cc->column) + " and " + std::to_string((cc->column + 1) % n) +
                        " have interleaved or touching vertical intervals");
    }
    auto o = copy_rows(d.o_rows());
    auto x = copy_rows(d.x_rows());
    const auto a = static_cast<std::size_t>(cc->column);
    const auto b = static_cast<std::size_t>((cc->column + 1) % n);
    std::swap(o[a], o[b]);
    std::swap(x[a], x[b]);
    return GridDiagram(std::move(o), std::move(x));
  }
  if (const auto* rc = std::get_if<RowCommute>(&m)) {
    check_index(rc->row, n, "row");
    if (!commutation_legal(d, *rc)) {
      throw IllegalMove("rows " + std::to_string(rc->row) + " and " + std::to_string((rc->row + 1) % n) +
                        " have interleaved or touching horizontal intervals");
    }
    const int a = rc->row, b = (rc->row + 1) % n;
    auto relabel = [a, b](int r) { return r == a ? b : r == b ? a : r; };
    auto o = copy_rows(d.o_rows());
    auto x = copy_rows(d.x_rows());
    std::transform(o.begin(), o.end(), o.begin(), relabel);
    std::transform(x.begin(), x.end(), x.begin(), relabel);
    return GridDiagram(std::move(o), std::move(x));
  }
  if (const auto* st = std::get_if<Stabilize>(&m)) return stabilize(d, *st);
  return destabilize(d, std::get<Destabilize>(m));
}

std::vector<GridMove> legal_moves(const GridDiagram& d, const MoveBounds& bounds) {
  const int n = d.size();
  std::vector<GridMove> out;
  for (int c = 0; c < n; ++c) {
    if (commutation_legal(d, ColumnCommute{c})) out.emplace_back(ColumnCommute{c});
  }
  for (int r = 0; r < n; ++r) {
    if (commutation_legal(d, RowCommute{r})) out.emplace_back(RowCommute{r});
  }
  if (n < bounds.max_n) {
    for (const Marker mk : {Marker::O, Marker::X}) {
      for (int c = 0; c < n; ++c) {
        for (const Corner k : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
          out.emplace_back(Stabilize{mk, c, k});
        }
      }
    }
  }
  if (n > bounds.min_n) {
    for (int c = 0; c + 1 < n; ++c) {
      if (destabilization_legal(d, Destabilize{c})) out.emplace_back(Destabilize{c});
    }
  }
  return out;
}

GridDiagram random_grid(int n, std::uint64_t seed, int max_attempts) {
  if (n < 2) throw ValidationError("random_grid needs n >= 2, got " + std::to_string(n));
  Rng rng(seed);
  std::vector<int> o(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::iota(o.begin(), o.end(), 0);
    std::iota(x.begin(), x.end(), 0);
    rng.shuffle(std::span<int>(o));
    rng.shuffle(std::span<int>(x));
    GridDiagram d(o, x);
    // A coincident cell closes a one-column component, so knots with n > 1
    // never have one.
    if (is_knot(d)) return d;
  }
  throw Error("random_grid: no knot diagram found in " + std::to_string(max_attempts) + " attempts");
}

MoveSequence random_moves(const GridDiagram& d, int k, std::uint64_t seed, const MoveBounds& bounds) {
  Rng rng(seed);
  MoveSequence seq{d, {}};
  for (int step = 0; step < k; ++step) {
    const auto moves = legal_moves(seq.result, bounds);
    if (moves.empty()) break;
    const auto& m = moves[static_cast<std::size_t>(rng.below(moves.size()))];
    seq.result = apply_move(seq.result, m);
    seq.moves.push_back(m);
  }
  return seq;
}

}  // namespace gridhom
