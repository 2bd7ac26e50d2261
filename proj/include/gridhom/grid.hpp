#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gridhom {

enum class Marker { O, X };

constexpr Marker other(Marker m) noexcept { return m == Marker::O ? Marker::X : Marker::O; }
char marker_char(Marker m) noexcept;

// An n x n toroidal grid diagram. Column c holds its O marker in cell
// (c, o_rows[c]) and its X marker in cell (c, x_rows[c]). Columns run left to
// right and rows bottom to top, both 0-based; cells occupy [c, c+1] x [r, r+1].
//
// Construction enforces the hard invariant that both row vectors are
// permutations of {0, ..., n-1}. Coincident O/X cells are allowed and are
// reported by validate() as warnings.
class GridDiagram {
 public:
  GridDiagram(std::vector<int> o_rows, std::vector<int> x_rows);

  int size() const noexcept { return static_cast<int>(o_rows_.size()); }

  std::span<const int> o_rows() const noexcept { return o_rows_; }
  std::span<const int> x_rows() const noexcept { return x_rows_; }
  std::span<const int> rows(Marker m) const noexcept { return m == Marker::O ? o_rows() : x_rows(); }

  int row_of(Marker m, int column) const { return rows(m)[static_cast<std::size_t>(column)]; }
  // Column holding the marker of type m in the given row.
  int column_of(Marker m, int row) const {
    return (m == Marker::O ? o_cols_ : x_cols_)[static_cast<std::size_t>(row)];
  }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.o_rows_ == b.o_rows_ && a.x_rows_ == b.x_rows_;
  }

 private:
  std::vector<int> o_rows_;
  std::vector<int> x_rows_;
  std::vector<int> o_cols_;
  std::vector<int> x_cols_;
};

struct ValidationWarning {
  int column;
  std::string message;
};

// Throws ValidationError if either vector is not a permutation of
// {0, ..., n-1}, if the lengths differ, or if n = 0.
void check_marker_rows(std::span<const int> o_rows, std::span<const int> x_rows);

// Soft checks on an already well-formed diagram: one warning per column whose
// O and X share a cell.
std::vector<ValidationWarning> validate(const GridDiagram& d);

// Number of cycles of column -> row of its X -> column of the O in that row.
int component_count(const GridDiagram& d);
bool is_knot(const GridDiagram& d);
// Throws ValidationError unless d has exactly one component.
void require_knot(const GridDiagram& d);

// Canonical text form: "n=<n>\nO=<rows>\nX=<rows>\n". Comment lines ("#") and
// blank lines are accepted on input. Text whose first non-blank character is
// '{' is parsed as JSON {"n":..,"O":[..],"X":[..]}.
GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& d);
nlohmann::json grid_to_json(const GridDiagram& d);
GridDiagram grid_from_json(const nlohmann::json& j);

// Reflection in a vertical line (column c -> n-1-c). Represents the mirror
// knot under the vertical-over-horizontal crossing convention.
GridDiagram mirror(const GridDiagram& d);
// Reflection in the diagonal. Swaps the roles of rows and columns; under the
// crossing convention this represents the same knot with reversed orientation.
GridDiagram transpose(const GridDiagram& d);
// Cyclic torus translation by (dc columns, dr rows).
GridDiagram translate(const GridDiagram& d, int dc, int dr);

// Lexicographically least (O, X) over all n^2 torus translations of d and of
// its transpose.
GridDiagram canonical_form(const GridDiagram& d);
// FNV-1a of serialize_grid(canonical_form(d)), rendered as 16 hex digits.
std::string canonical_hash(const GridDiagram& d);

// ASCII rendering, top row first: 'O', 'X', '*' (both) or '.'.
std::string render_ascii(const GridDiagram& d);

}  // namespace gridhom
