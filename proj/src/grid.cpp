#include "gridhom/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <tuple>

#include "gridhom/errors.hpp"

namespace gridhom {

char marker_char(Marker m) noexcept { return m == Marker::O ? 'O' : 'X'; }

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

void check_permutation(std::span<const int> rows, char name) {
  const auto n = static_cast<int>(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const int r = rows[c];
    if (r < 0 || r >= n) {
      throw ValidationError(std::string(1, name) + " entry " + std::to_string(r) + " in column " +
                            std::to_string(c) + " is outside [0, " + std::to_string(n) + ")");
    }
    if (seen[static_cast<std::size_t>(r)]) {
      throw ValidationError(std::string(1, name) + "_rows is not a permutation: row " + std::to_string(r) +
                            " appears twice");
    }
    seen[static_cast<std::size_t>(r)] = true;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<int> parse_ints(std::string_view s, std::string_view key) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    int v = 0;
    const auto* begin = s.data() + pos;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("malformed integer list for '" + std::string(key) + "': '" + std::string(s) + "'");
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

GridDiagram build_checked(long long n, std::vector<int> o, std::vector<int> x) {
  if (n <= 0) throw ValidationError("grid size must be positive, got n=" + std::to_string(n));
  if (o.size() != static_cast<std::size_t>(n) || x.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("expected " + std::to_string(n) + " entries in O and X, got " + std::to_string(o.size()) +
                          " and " + std::to_string(x.size()));
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram parse_canonical(std::string_view text) {
  bool have_n = false, have_o = false, have_x = false;
  long long n = 0;
  std::vector<int> o, x;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected key=value, got '" + std::string(line) + "'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "n") {
      if (have_n) throw ParseError("duplicate 'n' line");
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed grid size '" + std::string(value) + "'");
      }
      have_n = true;
    } else if (key == "O") {
      if (have_o) throw ParseError("duplicate 'O' line");
      o = parse_ints(value, key);
      have_o = true;
    } else if (key == "X") {
      if (have_x) throw ParseError("duplicate 'X' line");
      x = parse_ints(value, key);
      have_x = true;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_n || !have_o || !have_x) throw ParseError("grid text must contain n=, O= and X= lines");
  return build_checked(n, std::move(o), std::move(x));
}

std::string join(std::span<const int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> o_rows, std::vector<int> x_rows)
    : o_rows_(std::move(o_rows)), x_rows_(std::move(x_rows)) {
  check_marker_rows(o_rows_, x_rows_);
  o_cols_ = inverse(o_rows_);
  x_cols_ = inverse(x_rows_);
}

void check_marker_rows(std::span<const int> o_rows, std::span<const int> x_rows) {
  if (o_rows.empty()) throw ValidationError("grid size must be positive, got n=0");
  if (o_rows.size() != x_rows.size()) {
    throw ValidationError("O and X must have the same length (" + std::to_string(o_rows.size()) + " vs " +
                          std::to_string(x_rows.size()) + ")");
  }
  check_permutation(o_rows, 'O');
  check_permutation(x_rows, 'X');
}

std::vector<ValidationWarning> validate(const GridDiagram& d) {
  std::vector<ValidationWarning> out;
  for (int c = 0; c < d.size(); ++c) {
    if (d.row_of(Marker::O, c) == d.row_of(Marker::X, c)) {
      out.push_back({c, "coincident marker: O and X share cell (" + std::to_string(c) + ", " +
                            std::to_string(d.row_of(Marker::O, c)) + ")"});
    }
  }
  return out;
}

int component_count(const GridDiagram& d) {
  const int n = d.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int c = start; !seen[static_cast<std::size_t>(c)];) {
      seen[static_cast<std::size_t>(c)] = true;
      c = d.column_of(Marker::O, d.row_of(Marker::X, c));
    }
  }
  return cycles;
}

bool is_knot(const GridDiagram& d) { return component_count(d) == 1; }

void require_knot(const GridDiagram& d) {
  const int k = component_count(d);
  if (k != 1) {
    throw ValidationError("diagram has " + std::to_string(k) + " components; a knot (one component) is required");
  }
}

GridDiagram parse_grid(std::string_view text) {
  const auto body = trim(text);
  std::size_t i = 0;
  // Skip leading comment lines before sniffing the format.
  while (i < body.size()) {
    if (body[i] == '#') {
      const auto eol = body.find('\n', i);
      if (eol == std::string_view::npos) break;
      i = eol + 1;
    } else if (body[i] == ' ' || body[i] == '\t' || body[i] == '\r' || body[i] == '\n') {
      ++i;
    } else {
      break;
    }
  }
  if (i < body.size() && body[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body.substr(i));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed grid JSON: ") + e.what());
    }
    return grid_from_json(j);
  }
  return parse_canonical(text);
}

std::string serialize_grid(const GridDiagram& d) {
  return "n=" + std::to_string(d.size()) + "\nO=" + join(d.o_rows()) + "\nX=" + join(d.x_rows()) + "\n";
}

nlohmann::json grid_to_json(const GridDiagram& d) {
  return {{"n", d.size()},
          {"O", std::vector<int>(d.o_rows().begin(), d.o_rows().end())},
          {"X", std::vector<int>(d.x_rows().begin(), d.x_rows().end())}};
}

GridDiagram grid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("O") || !j.contains("X")) {
    throw ParseError("grid JSON must be an object with keys n, O, X");
  }
  if (!j["n"].is_number_integer() || !j["O"].is_array() || !j["X"].is_array()) {
    throw ParseError("grid JSON: n must be an integer and O, X arrays of integers");
  }
  std::vector<int> o, x;
  for (const auto& v : j["O"]) {
    if (!v.is_number_integer()) throw ParseError("grid JSON: non-integer entry in O");
    o.push_back(v.get<int>());
  }
  for (const auto& v : j["X"]) {
    if (!v.is_number_integer()) throw ParseError("grid JSON: non-integer entry in X");
    x.push_back(v.get<int>());
  }
  return build_checked(j["n"].get<long long>(), std::move(o), std::move(x));
}

GridDiagram mirror(const GridDiagram& d) {
  std::vector<int> o(d.o_rows().rbegin(), d.o_rows().rend());
  std::vector<int> x(d.x_rows().rbegin(), d.x_rows().rend());
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram transpose(const GridDiagram& d) {
  const auto n = static_cast<std::size_t>(d.size());
  std::vector<int> o(n), x(n);
  for (std::size_t r = 0; r < n; ++r) {
    o[r] = d.column_of(Marker::O, static_cast<int>(r));
    x[r] = d.column_of(Marker::X, static_cast<int>(r));
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram translate(const GridDiagram& d, int dc, int dr) {
  const int n = d.size();
  std::vector<int> o(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const auto nc = static_cast<std::size_t>(((c + dc) % n + n) % n);
    o[nc] = ((d.row_of(Marker::O, c) + dr) % n + n) % n;
    x[nc] = ((d.row_of(Marker::X, c) + dr) % n + n) % n;
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram canonical_form(const GridDiagram& d) {
  const int n = d.size();
  std::vector<int> best_o(d.o_rows().begin(), d.o_rows().end());
  std::vector<int> best_x(d.x_rows().begin(), d.x_rows().end());
  const GridDiagram t = transpose(d);
  for (const GridDiagram* base : {&d, &t}) {
    for (int dc = 0; dc < n; ++dc) {
      for (int dr = 0; dr < n; ++dr) {
        const GridDiagram c = translate(*base, dc, dr);
        const std::vector<int> co(c.o_rows().begin(), c.o_rows().end());
        const std::vector<int> cx(c.x_rows().begin(), c.x_rows().end());
        if (std::tie(co, cx) < std::tie(best_o, best_x)) {
          best_o = co;
          best_x = cx;
        }
      }
    }
  }
  return GridDiagram(std::move(best_o), std::move(best_x));
}

std::string canonical_hash(const GridDiagram& d) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char ch : serialize_grid(canonical_form(d))) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render_ascii(const GridDiagram& d) {
  const int n = d.size();
  std::string out;
  for (int r = n - 1; r >= 0; --r) {
    for (int c = 0; c < n; ++c) {
      const bool o = d.row_of(Marker::O, c) == r;
      const bool x = d.row_of(Marker::X, c) == r;
      out += o && x ? '*' : o ? 'O' : x ? 'X' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace gridhom
