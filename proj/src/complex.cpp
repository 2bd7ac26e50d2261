#include "gridhom/complex.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

#include "gridhom/errors.hpp"

namespace gridhom {

namespace {

// Largest row of the binomial table; bounds the monomial degree at about
// kBinomialRows - parts.
constexpr int kBinomialRows = 512;

// Sorts and drops indices that occur an even number of times.
void cancel_pairs(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

// Collects column pointers so the fill loops can run in parallel over
// generators.
struct Slot {
  BoundaryBlock* block = nullptr;
  std::uint32_t first = 0;
};

std::vector<Slot> slots_for(SparseBoundary& b, const GeneratorTable& gens, auto grading_of) {
  std::vector<Slot> slots(gens.size());
  for (std::size_t id = 0; id < gens.size(); ++id) {
    const auto g = grading_of(gens[id]);
    if (!g) continue;
    const auto idx = b.index_of({static_cast<std::uint32_t>(id), 0});
    slots[id] = {&b.block(*g), *idx};
  }
  for (auto& [g, blk] : b.blocks()) blk.columns.resize(blk.basis.size());
  return slots;
}

}  // namespace

MonomialIndexer::MonomialIndexer(int parts) : parts_(parts) {
  if (parts < 1 || parts > kMaxGeneratorGrid) throw std::invalid_argument("MonomialIndexer: bad part count");
  const int k = parts - 1;
  binomials_.assign(kBinomialRows + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));
  for (int n = 0; n <= kBinomialRows; ++n) {
    auto& row = binomials_[static_cast<std::size_t>(n)];
    row[0] = 1;
    for (int j = 1; j <= std::min(n, k); ++j) {
      const auto& prev = binomials_[static_cast<std::size_t>(n - 1)];
      row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)];
    }
  }
}

std::uint64_t MonomialIndexer::binomial(int n, int k) const {
  if (k < 0 || n < k) return 0;
  if (n > kBinomialRows) throw CapExceeded("monomial degree too large");
  return binomials_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t MonomialIndexer::count(int degree) const {
  if (degree < 0) return 0;
  return binomial(degree + parts_ - 1, parts_ - 1);
}

std::uint32_t MonomialIndexer::rank(std::span<const int> exponents) const {
  std::uint64_t r = 0;
  int prefix = 0;
  for (int i = 0; i + 1 < parts_; ++i) {
    prefix += exponents[static_cast<std::size_t>(i)];
    r += binomial(prefix + i, i + 1);
  }
  return static_cast<std::uint32_t>(r);
}

std::vector<int> MonomialIndexer::unrank(int degree, std::uint64_t rank) const {
  std::vector<int> e(static_cast<std::size_t>(parts_), 0);
  if (parts_ == 1) {
    e[0] = degree;
    return e;
  }
  // bar positions p_0 < ... < p_{parts-2} inside [0, degree + parts - 2]
  std::vector<int> p(static_cast<std::size_t>(parts_ - 1));
  int limit = degree + parts_ - 2;
  for (int i = parts_ - 2; i >= 0; --i) {
    int v = limit;
    while (binomial(v, i + 1) > rank) --v;
    rank -= binomial(v, i + 1);
    p[static_cast<std::size_t>(i)] = v;
    limit = v - 1;
  }
  e[0] = p[0];
  for (int i = 1; i < parts_ - 1; ++i) {
    e[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(i - 1)] - 1;
  }
  e[static_cast<std::size_t>(parts_ - 1)] = degree + parts_ - 2 - p[static_cast<std::size_t>(parts_ - 2)];
  return e;
}

const BoundaryBlock* SparseBoundary::find(Bigrading g) const {
  const auto it = blocks_.find(g);
  return it == blocks_.end() ? nullptr : &it->second;
}

BoundaryBlock& SparseBoundary::block(Bigrading g) {
  auto [it, inserted] = blocks_.try_emplace(g);
  if (inserted) it->second.grading = g;
  return it->second;
}

void SparseBoundary::add_generator(Bigrading g, std::uint32_t generator, std::uint32_t monomials) {
  auto& blk = block(g);
  offset_[generator] = static_cast<std::uint32_t>(blk.basis.size());
  for (std::uint32_t m = 0; m < monomials; ++m) blk.basis.push_back({generator, m});
}

std::optional<std::uint32_t> SparseBoundary::index_of(BasisLabel label) const {
  if (label.generator >= offset_.size() || offset_[label.generator] == kAbsent) return std::nullopt;
  return offset_[label.generator] + label.monomial;
}

std::size_t SparseBoundary::dimension() const {
  std::size_t n = 0;
  for (const auto& [g, b] : blocks_) n += b.basis.size();
  return n;
}

std::size_t SparseBoundary::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [g, b] : blocks_) {
    for (const auto& c : b.columns) n += c.size();
  }
  return n;
}

std::size_t SparseBoundary::target_dimension(Bigrading g) const {
  const auto* t = find({g.maslov - 1, g.alexander});
  return t ? t->basis.size() : 0;
}

gf2::Matrix SparseBoundary::matrix(Bigrading g) const {
  const auto* b = find(g);
  if (!b) return {};
  return gf2::Matrix::from_columns(target_dimension(g), b->basis.size(), b->columns);
}

nlohmann::json SparseBoundary::debug_json() const {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [g, b] : blocks_) {
    std::size_t nz = 0;
    for (const auto& c : b.columns) nz += c.size();
    blocks.push_back({{"M", g.maslov},
                      {"A", g.alexander},
                      {"rows", target_dimension(g)},
                      {"cols", b.basis.size()},
                      {"nonzeros", nz}});
  }
  return {{"dimension", dimension()}, {"nonzeros", nonzeros()}, {"blocks", blocks}};
}

SparseBoundary build_tilde(const GeneratorTable& gens, const RectangleTable& avoid_all) {
  if (avoid_all.filter() != RectangleFilter::AvoidAllMarkers) {
    throw std::invalid_argument("build_tilde needs the marker-avoiding rectangle table");
  }
  SparseBoundary b(gens.size());
  auto grading = [](const Generator& g) { return std::optional<Bigrading>({g.maslov, g.alexander}); };
  for (std::size_t id = 0; id < gens.size(); ++id) b.add_generator(*grading(gens[id]), static_cast<std::uint32_t>(id), 1);
  const auto slots = slots_for(b, gens, grading);

  std::atomic<bool> bad_grading{false};
  const auto count = static_cast<long long>(gens.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) {
    const auto id = static_cast<std::size_t>(i);
    const Generator& x = gens[id];
    auto& col = slots[id].block->columns[slots[id].first];
    for (const auto& e : avoid_all.out(id)) {
      const Generator& y = gens[e.target];
      if (y.maslov != x.maslov - 1 || y.alexander != x.alexander) bad_grading.store(true, std::memory_order_relaxed);
      col.push_back(*b.index_of({e.target, 0}));
    }
    cancel_pairs(col);
  }
  if (bad_grading.load()) throw ConsistencyError("tilde differential does not have bidegree (-1, 0)");
  return b;
}

SparseBoundary build_tilde(const GridDiagram& d, const EnumerationOptions& options) {
  const GeneratorTable gens(d, options);
  const RectangleTable rects(d, gens, RectangleFilter::AvoidAllMarkers);
  return build_tilde(gens, rects);
}

SparseBoundary build_minus_slice(const GeneratorTable& gens, const RectangleTable& avoid_x,
                                 const MonomialIndexer& monomials, int s) {
  if (avoid_x.filter() != RectangleFilter::AvoidX) throw std::invalid_argument("minus slices need the X-avoiding table");
  const int n = gens.grid_size();
  SparseBoundary b(gens.size());
  auto grading = [s](const Generator& g) -> std::optional<Bigrading> {
    const int k = g.alexander - s;
    if (k < 0) return std::nullopt;
    return Bigrading{g.maslov - 2 * k, s};
  };
  for (std::size_t id = 0; id < gens.size(); ++id) {
    if (const auto g = grading(gens[id])) {
      const auto m = monomials.count(gens[id].alexander - s);
      if (m > 0xffffffffULL) throw CapExceeded("minus slice too large");
      b.add_generator(*g, static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(m));
    }
  }
  const auto slots = slots_for(b, gens, grading);

  std::atomic<bool> bad{false};
  const auto count = static_cast<long long>(gens.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    const auto id = static_cast<std::size_t>(i);
    if (!slots[id].block) continue;
    const Generator& x = gens[id];
    const int k = x.alexander - s;
    const auto mcount = monomials.count(k);
    const auto out = avoid_x.out(id);
    for (std::uint64_t m = 0; m < mcount; ++m) {
      auto& col = slots[id].block->columns[slots[id].first + m];
      const auto e = monomials.unrank(k, m);
      std::vector<int> shifted(e.size());
      for (const auto& edge : out) {
        const Generator& y = gens[edge.target];
        for (int c = 0; c < n; ++c) {
          shifted[static_cast<std::size_t>(c)] = e[static_cast<std::size_t>(c)] + static_cast<int>((edge.o_hits >> c) & 1U);
        }
        const int hits = std::popcount(edge.o_hits);
        if (y.alexander - s != k + hits || y.maslov != x.maslov - 1 + 2 * hits) {
          bad.store(true, std::memory_order_relaxed);
          continue;
        }
        col.push_back(*b.index_of({edge.target, monomials.rank(shifted)}));
      }
      cancel_pairs(col);
    }
  }
  if (bad.load()) throw ConsistencyError("minus differential violates the grading-drop law");
  return b;
}

SparseBoundary build_collapsed_slice(const GeneratorTable& gens, const RectangleTable& avoid_x, int s) {
  if (avoid_x.filter() != RectangleFilter::AvoidX) throw std::invalid_argument("minus slices need the X-avoiding table");
  SparseBoundary b(gens.size());
  auto grading = [s](const Generator& g) -> std::optional<Bigrading> {
    const int k = g.alexander - s;
    if (k < 0) return std::nullopt;
    return Bigrading{g.maslov - 2 * k, s};
  };
  for (std::size_t id = 0; id < gens.size(); ++id) {
    if (const auto g = grading(gens[id])) b.add_generator(*g, static_cast<std::uint32_t>(id), 1);
  }
  const auto slots = slots_for(b, gens, grading);

  std::atomic<bool> bad{false};
  const auto count = static_cast<long long>(gens.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) {
    const auto id = static_cast<std::size_t>(i);
    if (!slots[id].block) continue;
    const Generator& x = gens[id];
    auto& col = slots[id].block->columns[slots[id].first];
    for (const auto& edge : avoid_x.out(id)) {
      const Generator& y = gens[edge.target];
      const int hits = std::popcount(edge.o_hits);
      if (y.alexander != x.alexander + hits || y.maslov != x.maslov - 1 + 2 * hits) {
        bad.store(true, std::memory_order_relaxed);
        continue;
      }
      col.push_back(*b.index_of({edge.target, 0}));
    }
    cancel_pairs(col);
  }
  if (bad.load()) throw ConsistencyError("minus differential violates the grading-drop law");
  return b;
}

bool verify_d_squared(const SparseBoundary& b) {
  for (const auto& [g, blk] : b.blocks()) {
    const auto* mid = b.find({g.maslov - 1, g.alexander});
    for (const auto& col : blk.columns) {
      if (col.empty()) continue;
      if (!mid) return false;
      std::vector<std::uint32_t> acc;
      for (const auto i : col) {
        if (i >= mid->columns.size()) return false;
        const auto& c2 = mid->columns[i];
        acc.insert(acc.end(), c2.begin(), c2.end());
      }
      cancel_pairs(acc);
      if (!acc.empty()) return false;
    }
  }
  return true;
}

}  // namespace gridhom
