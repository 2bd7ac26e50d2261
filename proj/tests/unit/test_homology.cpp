#include "doctest.h"
#include "gridhom/complex.hpp"
#include "gridhom/errors.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/module.hpp"
#include "gridhom/reference.hpp"
#include "frozen.hpp"
#include "helpers.hpp"

using namespace gridhom;

TEST_SUITE("homology") {
  TEST_CASE("frozen tilde homology") {
    CHECK(homology_ranks(build_tilde(testutil::g1())) == frozen::poly({{0, 0, 1}}));
    CHECK(homology_ranks(build_tilde(testutil::g2())) == frozen::unknot2_tilde());
    CHECK(homology_ranks(build_tilde(testutil::g3())) == frozen::unknot3_tilde());
    CHECK(homology_ranks(build_tilde(testutil::trefoil())) == frozen::trefoil_tilde());
    CHECK(homology_ranks(build_tilde(testutil::builtin("figure-eight"))) == frozen::figure_eight_tilde());
    CHECK(frozen::trefoil_tilde().to_string() ==
          "q^2t + 5q + 11t^-1 + 14q^-1t^-2 + 11q^-2t^-3 + 5q^-3t^-4 + q^-4t^-5");
  }

  TEST_CASE("hat homology by deconvolution") {
    CHECK(hat_from_tilde(frozen::trefoil_tilde(), 5) == frozen::trefoil_hat());
    CHECK(hat_from_tilde(frozen::figure_eight_tilde(), 6) == frozen::figure_eight_hat());
    CHECK(hat_from_tilde(frozen::unknot3_tilde(), 3) == frozen::poly({{0, 0, 1}}));
    CHECK_THROWS_AS(hat_from_tilde(frozen::trefoil_hat(), 5), ConsistencyError);
  }

  TEST_CASE("parallel homology equals the serial reference") {
    auto ds = testutil::random_knots(25, 2, 6, 313);
    ds.push_back(testutil::trefoil());
    for (const auto& d : ds) {
      const auto b = build_tilde(d);
      const auto r = homology_ranks(b);
      CHECK(r == reference::tilde_ranks(d));
      CHECK(Homology(b).ranks() == r);
    }
  }

  TEST_CASE("ranks do not depend on the basis order") {
    for (const auto& d : testutil::random_knots(6, 4, 6, 2)) {
      const auto b = build_tilde(d);
      const auto r = homology_ranks(b);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto p = permute_basis(b, seed);
        CHECK(verify_d_squared(p));
        CHECK(homology_ranks(p) == r);
      }
    }
  }

  TEST_CASE("representatives are cycles with independent classes") {
    const Homology h(build_tilde(testutil::trefoil()));
    for (const auto& [g, blk] : h.blocks()) {
      for (std::size_t i = 0; i < blk.rank(); ++i) {
        const auto c = blk.coordinates(blk.representatives()[i]);
        CHECK(c.count() == 1);
        CHECK(c.test(i));
      }
    }
    // a non-cycle is rejected
    const auto& cx = h.complex();
    for (const auto& [g, blk] : cx.blocks()) {
      for (std::size_t j = 0; j < blk.columns.size(); ++j) {
        if (blk.columns[j].empty()) continue;
        gf2::BitVector v(blk.basis.size());
        v.set(j);
        CHECK_THROWS_AS(h.block(g) ? (void)h.block(g)->coordinates(v) : throw ConsistencyError("no block"),
                        ConsistencyError);
        return;
      }
    }
  }
}
