#include <numeric>
#include <set>

#include "doctest.h"
#include "gridhom/complex.hpp"
#include "gridhom/errors.hpp"
#include "gridhom/generators.hpp"
#include "gridhom/rectangles.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace gridhom;

TEST_SUITE("complex") {
  TEST_CASE("the one- and two-by-two grids have zero differential") {
    CHECK(build_tilde(testutil::g1()).nonzeros() == 0);
    const auto b = build_tilde(testutil::g2());
    CHECK(b.dimension() == 2);
    CHECK(b.nonzeros() == 0);
  }

  TEST_CASE("tilde differential squares to zero") {
    auto ds = testutil::random_knots(20, 2, 6, 61);
    ds.push_back(testutil::trefoil());
    ds.push_back(testutil::builtin("figure-eight"));
    for (const auto& d : ds) CHECK(verify_d_squared(build_tilde(d)));
  }

  TEST_CASE("minus slices square to zero on both routes") {
    for (const auto& d : testutil::random_knots(8, 2, 5, 3)) {
      const GeneratorTable gens(d);
      const RectangleTable rects(d, gens, RectangleFilter::AvoidX);
      const MonomialIndexer mono(d.size());
      for (int s = gens.max_alexander(); s >= gens.max_alexander() - 4; --s) {
        CHECK(verify_d_squared(build_collapsed_slice(gens, rects, s)));
        CHECK(verify_d_squared(build_minus_slice(gens, rects, mono, s)));
      }
    }
  }

  TEST_CASE("a corrupted differential is caught") {
    auto b = build_tilde(testutil::trefoil());
    bool flipped = false;
    for (auto& [g, blk] : b.blocks()) {
      if (flipped) break;
      const auto* target = b.find({g.maslov - 1, g.alexander});
      if (!target || target->basis.empty() || !b.find({g.maslov - 2, g.alexander})) continue;
      for (auto& col : blk.columns) {
        if (!col.empty()) {
          // move one boundary term to a different target row
          const auto r = col.front();
          col.erase(col.begin());
          const auto other = static_cast<std::uint32_t>((r + 1) % target->basis.size());
          col.insert(std::lower_bound(col.begin(), col.end(), other), other);
          flipped = true;
          break;
        }
      }
    }
    REQUIRE(flipped);
    CHECK_FALSE(verify_d_squared(b));
  }

  TEST_CASE("Euler characteristic of the chain complex matches the generator sum") {
    for (const auto& d : testutil::random_knots(10, 2, 5, 77)) {
      const auto b = build_tilde(d);
      PoincarePolynomial chain;
      for (const auto& [g, blk] : b.blocks()) chain.add(g, static_cast<std::int64_t>(blk.basis.size()));
      std::map<int, long long> direct;
      for (const auto& s : oracle::permutations(d.size())) {
        direct[oracle::alexander(d, s)] += oracle::maslov(d, s, Marker::O) % 2 == 0 ? 1 : -1;
      }
      const auto chi = chain.euler_characteristic();
      for (const auto& [a, c] : direct) CHECK(chi.coefficient(a) == c);
    }
  }

  TEST_CASE("monomial indexer") {
    const MonomialIndexer m(3);
    CHECK(m.count(0) == 1);
    CHECK(m.count(2) == 6);
    CHECK(m.count(4) == 15);
    for (int k = 0; k <= 5; ++k) {
      std::set<std::vector<int>> seen;
      for (std::uint64_t r = 0; r < m.count(k); ++r) {
        const auto e = m.unrank(k, r);
        CHECK(e.size() == 3);
        CHECK(std::accumulate(e.begin(), e.end(), 0) == k);
        CHECK(m.rank(e) == r);
        seen.insert(e);
      }
      CHECK(seen.size() == m.count(k));
    }
    const MonomialIndexer one(1);
    CHECK(one.count(7) == 1);
    CHECK(one.unrank(7, 0) == std::vector<int>{7});
  }

  TEST_CASE("basis label lookup") {
    const GeneratorTable gens(testutil::trefoil());
    const RectangleTable rects(testutil::trefoil(), gens, RectangleFilter::AvoidX);
    const MonomialIndexer mono(5);
    const auto b = build_minus_slice(gens, rects, mono, 0);
    for (const auto& [g, blk] : b.blocks()) {
      for (std::size_t i = 0; i < blk.basis.size(); ++i) CHECK(b.index_of(blk.basis[i]) == i);
    }
  }
}
