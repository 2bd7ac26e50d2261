#include <algorithm>

#include "doctest.h"
#include "gridhom/generators.hpp"
#include "gridhom/rectangles.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace gridhom;

namespace {

std::vector<std::uint8_t> bytes(const std::vector<int>& v) { return {v.begin(), v.end()}; }

int popcount(std::uint32_t v) { return __builtin_popcount(v); }

}  // namespace

TEST_SUITE("rectangles") {
  TEST_CASE("a thin rectangle between two generators") {
    const auto d = testutil::trefoil();
    const auto x = bytes({3, 4, 0, 2, 1});
    const auto y = bytes({3, 4, 2, 0, 1});
    const auto rs = rectangles(d, x, y);
    REQUIRE(rs.size() == 2);
    const auto it = std::find_if(rs.begin(), rs.end(), [](const Rectangle& r) { return r.left_column == 2; });
    REQUIRE(it != rs.end());
    CHECK(it->width == 1);
    CHECK(it->height == 2);
    CHECK(it->bottom_row == 0);
    CHECK(it->top_row == 2);
    CHECK(it->empty);
    CHECK(it->interior_points == 0);
    const auto other = std::find_if(rs.begin(), rs.end(), [](const Rectangle& r) { return r.left_column == 3; });
    REQUIRE(other != rs.end());
    CHECK(other->width == 4);
    CHECK(other->height == 3);
  }

  TEST_CASE("identical or far-apart generators have no rectangles") {
    const auto d = testutil::trefoil();
    const auto x = bytes({0, 1, 2, 3, 4});
    CHECK(rectangles(d, x, x).empty());
    CHECK(rectangles(d, x, bytes({1, 2, 0, 3, 4})).empty());
  }

  TEST_CASE("rectangle geometry matches the unwrapped oracle") {
    auto ds = testutil::random_knots(10, 3, 5, 7);
    ds.push_back(testutil::trefoil());
    for (const auto& d : ds) {
      const int n = d.size();
      for (const auto& xv : oracle::permutations(n)) {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            auto yv = xv;
            std::swap(yv[std::size_t(a)], yv[std::size_t(b)]);
            auto got = rectangles(d, bytes(xv), bytes(yv));
            auto want = oracle::rectangles(d, xv, yv);
            REQUIRE(got.size() == 2);
            REQUIRE(want.size() == 2);
            for (const auto& w : want) {
              const auto it = std::find_if(got.begin(), got.end(),
                                           [&](const Rectangle& r) { return r.left_column == w.left; });
              REQUIRE(it != got.end());
              CHECK(it->right_column == w.right);
              CHECK(popcount(it->o_hits) == w.o_count);
              CHECK(popcount(it->x_hits) == w.x_count);
              CHECK(it->interior_points == w.interior);
              CHECK(it->empty == (w.interior == 0));
            }
          }
        }
      }
    }
  }

  TEST_CASE("the table lists exactly the filtered empty rectangles") {
    for (const auto& d : testutil::random_knots(6, 3, 5, 19)) {
      const GeneratorTable gens(d);
      for (const auto filter : {RectangleFilter::AvoidAllMarkers, RectangleFilter::AvoidX}) {
        const RectangleTable table(d, gens, filter);
        std::size_t expected = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const std::vector<int> xv(gens[g].sigma.begin(), gens[g].sigma.begin() + d.size());
          std::size_t here = 0;
          for (int a = 0; a < d.size(); ++a) {
            for (int b = a + 1; b < d.size(); ++b) {
              auto yv = xv;
              std::swap(yv[std::size_t(a)], yv[std::size_t(b)]);
              for (const auto& w : oracle::rectangles(d, xv, yv)) {
                here += w.interior == 0 && w.x_count == 0 &&
                        (filter == RectangleFilter::AvoidX || w.o_count == 0);
              }
            }
          }
          CHECK(table.out(g).size() == here);
          expected += here;
          for (const auto& e : table.out(g)) {
            if (filter == RectangleFilter::AvoidAllMarkers) CHECK(e.o_hits == 0);
          }
        }
        CHECK(table.edge_count() == expected);
      }
    }
  }
}
