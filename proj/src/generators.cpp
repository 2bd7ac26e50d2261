#include "gridhom/generators.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

#include "gridhom/errors.hpp"

namespace gridhom {

namespace {

std::atomic<int> g_maslov_fault{0};

// Counting tables for one marker set. ne[c][r] counts markers strictly north-
// east of the lattice point (c, r), sw[c][r] those strictly south-west.
class MarkerCounts {
 public:
  MarkerCounts(const GridDiagram& d, Marker m) : n_(d.size()), ne_(cells()), sw_(cells()) {
    const auto rows = d.rows(m);
    for (int c = 0; c <= n_; ++c) {
      for (int r = 0; r <= n_; ++r) {
        int ne = 0, sw = 0;
        for (int k = 0; k < n_; ++k) {
          const int mr = rows[static_cast<std::size_t>(k)];
          if (k >= c && mr >= r) ++ne;
          if (k < c && mr < r) ++sw;
        }
        ne_[index(c, r)] = ne;
        sw_[index(c, r)] = sw;
      }
    }
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (a < b && rows[static_cast<std::size_t>(a)] < rows[static_cast<std::size_t>(b)]) ++self_pairs_;
      }
    }
  }

  // I(x, M) + I(M, x) for the point (c, r).
  int mixed(int c, int r) const noexcept { return ne_[index(c, r)] + sw_[index(c, r)]; }
  int self_pairs() const noexcept { return self_pairs_; }

 private:
  std::size_t cells() const { return static_cast<std::size_t>((n_ + 1) * (n_ + 1)); }
  std::size_t index(int c, int r) const noexcept { return static_cast<std::size_t>(c * (n_ + 1) + r); }

  int n_;
  std::vector<int> ne_;
  std::vector<int> sw_;
  int self_pairs_ = 0;
};

// M = J(x,x) - 2J(x,M) + J(M,M) + 1 with J(A,B) = (I(A,B) + I(B,A)) / 2.
// J(x,x) = I(x,x) and J(M,M) = I(M,M) since I is symmetric on a single set, and
// 2J(x,M) = I(x,M) + I(M,x), so everything stays integral.
template <typename Sigma>
int maslov_with(const MarkerCounts& mc, const Sigma& sigma, int n) {
  int xx = 0, mixed = 0;
  for (int i = 0; i < n; ++i) {
    const int si = static_cast<int>(sigma[static_cast<std::size_t>(i)]);
    mixed += mc.mixed(i, si);
    for (int j = i + 1; j < n; ++j) {
      if (si < static_cast<int>(sigma[static_cast<std::size_t>(j)])) ++xx;
    }
  }
  return xx - mixed + mc.self_pairs() + 1;
}

int alexander_from(int mo, int mx, int n) {
  const int twice = mo - mx - (n - 1);
  if (twice % 2 != 0) {
    throw ValidationError("non-integral Alexander grading; the diagram is not a knot");
  }
  return twice / 2;
}

}  // namespace

namespace testing {
void set_maslov_fault(int shift) noexcept { g_maslov_fault.store(shift); }
int maslov_fault() noexcept { return g_maslov_fault.load(); }
}  // namespace testing

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation unrank_permutation(std::uint64_t rank, int n) {
  Permutation p{};
  unsigned unused = (1U << n) - 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    auto k = static_cast<int>(rank / f);
    rank %= f;
    // k-th smallest unused value
    unsigned bits = unused;
    for (int j = 0; j < k; ++j) bits &= bits - 1;
    const int v = std::countr_zero(bits);
    p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    unused &= ~(1U << v);
  }
  return p;
}

std::uint64_t rank_permutation(const Permutation& sigma, int n) noexcept {
  std::uint64_t rank = 0;
  unsigned unused = (1U << n) - 1;
  for (int i = 0; i < n; ++i) {
    const unsigned v = sigma[static_cast<std::size_t>(i)];
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(std::popcount(unused & ((1U << v) - 1)));
    unused &= ~(1U << v);
  }
  return rank;
}

int maslov_grading(const GridDiagram& d, std::span<const int> sigma, Marker markers) {
  return maslov_with(MarkerCounts(d, markers), sigma, d.size());
}

int alexander_grading(const GridDiagram& d, std::span<const int> sigma) {
  return alexander_from(maslov_grading(d, sigma, Marker::O), maslov_grading(d, sigma, Marker::X), d.size());
}

GeneratorTable::GeneratorTable(const GridDiagram& d, const EnumerationOptions& options) : n_(d.size()) {
  const int cap = std::min(options.max_n, kMaxGeneratorGrid);
  if (n_ > cap) {
    throw CapExceeded("grid size " + std::to_string(n_) + " exceeds the enumeration cap of " + std::to_string(cap) +
                      " (" + std::to_string(n_) + "! generators)");
  }
  require_knot(d);

  const MarkerCounts oc(d, Marker::O);
  const MarkerCounts xc(d, Marker::X);
  const auto total = static_cast<long long>(factorial(n_));
  generators_.resize(static_cast<std::size_t>(total));
  const int fault = testing::maslov_fault();
  const int n = n_;

  // Alexander parity failures are collected, not thrown, inside the parallel
  // region.
  std::atomic<bool> bad_parity{false};
#pragma omp parallel for schedule(static)
  for (long long id = 0; id < total; ++id) {
    Generator& g = generators_[static_cast<std::size_t>(id)];
    g.sigma = unrank_permutation(static_cast<std::uint64_t>(id), n);
    const int mo = maslov_with(oc, g.sigma, n);
    const int mx = maslov_with(xc, g.sigma, n);
    const int twice = mo - mx - (n - 1);
    if (twice % 2 != 0) bad_parity.store(true, std::memory_order_relaxed);
    g.maslov = mo + fault;
    g.alexander = twice / 2;
  }
  if (bad_parity.load()) throw ValidationError("non-integral Alexander grading; the diagram is not a knot");

  max_alexander_ = std::numeric_limits<int>::min();
  min_alexander_ = std::numeric_limits<int>::max();
  max_maslov_ = std::numeric_limits<int>::min();
  min_maslov_ = std::numeric_limits<int>::max();
  for (const auto& g : generators_) {
    max_alexander_ = std::max(max_alexander_, g.alexander);
    min_alexander_ = std::min(min_alexander_, g.alexander);
    max_maslov_ = std::max(max_maslov_, g.maslov);
    min_maslov_ = std::min(min_maslov_, g.maslov);
  }
}

std::uint32_t GeneratorTable::id_of(const Permutation& sigma) const noexcept {
  return static_cast<std::uint32_t>(rank_permutation(sigma, n_));
}

}  // namespace gridhom
