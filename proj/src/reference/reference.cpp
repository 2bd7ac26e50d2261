#include "gridhom/reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "gridhom/errors.hpp"

namespace gridhom::reference {

namespace {

using Point = std::pair<int, int>;

int pairs_sw_ne(const std::vector<Point>& a, const std::vector<Point>& b) {
  int count = 0;
  for (const auto& p : a) {
    for (const auto& q : b) {
      if (p.first < q.first && p.second < q.second) ++count;
    }
  }
  return count;
}

// 2 J(A, B)
int twice_j(const std::vector<Point>& a, const std::vector<Point>& b) { return pairs_sw_ne(a, b) + pairs_sw_ne(b, a); }

}  // namespace

std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> columns) {
  for (auto& c : columns) {
    std::sort(c.begin(), c.end());
    std::vector<std::uint32_t> odd;
    for (std::size_t i = 0; i < c.size();) {
      std::size_t j = i;
      while (j < c.size() && c[j] == c[i]) ++j;
      if ((j - i) % 2) odd.push_back(c[i]);
      i = j;
    }
    c = std::move(odd);
  }
  std::map<std::uint32_t, std::size_t> owner;  // lowest row -> reduced column
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& c = columns[j];
    while (!c.empty()) {
      const auto it = owner.find(c.back());
      if (it == owner.end()) break;
      std::vector<std::uint32_t> sum;
      std::set_symmetric_difference(c.begin(), c.end(), columns[it->second].begin(), columns[it->second].end(),
                                    std::back_inserter(sum));
      c = std::move(sum);
    }
    if (!c.empty()) {
      owner[c.back()] = j;
      ++rank;
    }
  }
  return rank;
}

int maslov_literal(const GridDiagram& d, std::span<const int> sigma, Marker markers) {
  const int n = d.size();
  std::vector<Point> x, m;
  for (int i = 0; i < n; ++i) {
    x.emplace_back(2 * i, 2 * sigma[static_cast<std::size_t>(i)]);
    m.emplace_back(2 * i + 1, 2 * d.row_of(markers, i) + 1);
  }
  const int twice_m = twice_j(x, x) - 2 * twice_j(x, m) + twice_j(m, m) + 2;
  if (twice_m % 2 != 0) throw ConsistencyError("J-formula produced a non-integer Maslov grading");
  return twice_m / 2;
}

BigradedRanks tilde_ranks(const GridDiagram& d) {
  require_knot(d);
  const int n = d.size();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::map<std::vector<int>, std::uint32_t> index;
  std::vector<std::vector<int>> gens;
  std::vector<Bigrading> grading;
  do {
    const int mo = maslov_literal(d, sigma, Marker::O);
    const int mx = maslov_literal(d, sigma, Marker::X);
    if ((mo - mx - (n - 1)) % 2 != 0) throw ValidationError("non-integral Alexander grading");
    index.emplace(sigma, static_cast<std::uint32_t>(gens.size()));
    gens.push_back(sigma);
    grading.push_back({mo, (mo - mx - (n - 1)) / 2});
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  // Cell (c, r) lies in the rectangle from lattice column a (width w) and
  // lattice row b (height h) iff its offsets from (a, b) are below (w, h).
  auto inside_cell = [n](int c, int r, int a, int b, int w, int h) {
    return (c - a + n) % n < w && (r - b + n) % n < h;
  };
  std::map<Bigrading, std::vector<std::uint32_t>> members;
  for (std::uint32_t g = 0; g < gens.size(); ++g) members[grading[g]].push_back(g);
  std::map<Bigrading, std::vector<std::vector<std::uint32_t>>> columns;
  for (const auto& [g, ids] : members) columns[g].assign(ids.size(), {});
  std::vector<std::uint32_t> local(gens.size());
  for (const auto& [g, ids] : members) {
    for (std::uint32_t k = 0; k < ids.size(); ++k) local[ids[k]] = k;
  }

  for (std::uint32_t g = 0; g < gens.size(); ++g) {
    const auto& x = gens[g];
    for (int a = 0; a < n; ++a) {
      for (int c2 = 0; c2 < n; ++c2) {
        if (a == c2) continue;
        const int w = (c2 - a + n) % n;
        const int b = x[static_cast<std::size_t>(a)];
        const int h = (x[static_cast<std::size_t>(c2)] - b + n) % n;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c) {
          if (inside_cell(c, d.row_of(Marker::O, c), a, b, w, h) || inside_cell(c, d.row_of(Marker::X, c), a, b, w, h)) {
            ok = false;
          }
          const int dc = (c - a + n) % n, dr = (x[static_cast<std::size_t>(c)] - b + n) % n;
          if (dc > 0 && dc < w && dr > 0 && dr < h) ok = false;
        }
        if (!ok) continue;
        auto y = x;
        std::swap(y[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(c2)]);
        const auto t = index.at(y);
        if (grading[t].maslov != grading[g].maslov - 1 || grading[t].alexander != grading[g].alexander) {
          throw ConsistencyError("reference tilde differential has the wrong bidegree");
        }
        columns[grading[g]][local[g]].push_back(local[t]);
      }
    }
  }

  std::map<Bigrading, std::size_t> rank;
  for (auto& [g, cols] : columns) rank[g] = sparse_rank(cols);
  BigradedRanks out;
  for (const auto& [g, ids] : members) {
    const auto above = rank.find({g.maslov + 1, g.alexander});
    const std::size_t in = above == rank.end() ? 0 : above->second;
    out.add(g, static_cast<std::int64_t>(ids.size() - rank[g] - in));
  }
  return out;
}

}  // namespace gridhom::reference
