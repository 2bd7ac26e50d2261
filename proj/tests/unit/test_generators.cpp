#include <set>

#include "doctest.h"
#include "gridhom/errors.hpp"
#include "gridhom/generators.hpp"
#include "gridhom/reference.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace gridhom;

namespace {
std::vector<int> as_vector(const Permutation& p, int n) { return {p.begin(), p.begin() + n}; }
}

TEST_SUITE("generators") {
  TEST_CASE("generator counts") {
    CHECK(GeneratorTable(testutil::g1()).size() == 1);
    CHECK(GeneratorTable(testutil::g3()).size() == 6);
    CHECK(GeneratorTable(testutil::trefoil()).size() == 120);
    CHECK(factorial(0) == 1);
    CHECK(factorial(9) == 362880);
  }

  TEST_CASE("frozen gradings of small diagrams") {
    const GeneratorTable t1(testutil::g1());
    CHECK(t1[0].maslov == 0);
    CHECK(t1[0].alexander == 0);
    const GeneratorTable t2(testutil::g2());
    std::multiset<int> m;
    for (const auto& g : t2.generators()) {
      m.insert(g.maslov);
      CHECK(g.alexander == g.maslov);
    }
    CHECK(m == std::multiset<int>{-1, 0});
    const GeneratorTable tt(testutil::trefoil());
    CHECK(tt.max_maslov() == 2);
    CHECK(tt.max_alexander() == 1);
  }

  TEST_CASE("production, literal and oracle Maslov gradings agree") {
    auto ds = testutil::random_knots(12, 2, 6, 41);
    ds.push_back(testutil::trefoil());
    ds.push_back(testutil::builtin("figure-eight"));
    for (const auto& d : ds) {
      const GeneratorTable t(d);
      for (std::size_t i = 0; i < t.size(); i += 1 + t.size() / 200) {
        const auto sigma = as_vector(t[i].sigma, d.size());
        for (const Marker mk : {Marker::O, Marker::X}) {
          const int m = maslov_grading(d, sigma, mk);
          CHECK(m == reference::maslov_literal(d, sigma, mk));
          CHECK(m == oracle::maslov(d, sigma, mk));
        }
        CHECK(t[i].maslov == oracle::maslov(d, sigma, Marker::O));
        CHECK(t[i].alexander == oracle::alexander(d, sigma));
      }
    }
  }

  TEST_CASE("link diagrams have half-integer Alexander gradings") {
    const GridDiagram link({0, 1}, {1, 0});
    const GridDiagram two_unknots({1, 0, 3, 2}, {0, 1, 2, 3});
    CHECK(component_count(two_unknots) == 2);
    CHECK_THROWS_AS(alexander_grading(two_unknots, std::vector<int>{0, 1, 2, 3}), ValidationError);
    CHECK(component_count(link) == 1);
  }

  TEST_CASE("permutation rank and unrank") {
    for (int n = 1; n <= 6; ++n) {
      for (std::uint64_t r = 0; r < factorial(n); ++r) CHECK(rank_permutation(unrank_permutation(r, n), n) == r);
    }
    const GeneratorTable t(testutil::trefoil());
    for (std::uint32_t i = 0; i < t.size(); ++i) CHECK(t.id_of(t[i].sigma) == i);
  }

  TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(GeneratorTable(testutil::trefoil(), EnumerationOptions{4}), CapExceeded);
  }
}
