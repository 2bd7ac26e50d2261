#include "doctest.h"
#include "gridhom/errors.hpp"
#include "gridhom/fuzz.hpp"
#include "gridhom/report.hpp"
#include "helpers.hpp"

using namespace gridhom;

TEST_SUITE("report") {
  TEST_CASE("flavor names") {
    CHECK(parse_flavor("tilde") == Flavor::Tilde);
    CHECK(parse_flavor("minus") == Flavor::Minus);
    CHECK(to_string(Flavor::Hat) == "hat");
    CHECK_THROWS_AS(parse_flavor("plus"), ValidationError);
  }

  TEST_CASE("JSON is deterministic and carries no timing by default") {
    const auto a = compute_report(testutil::trefoil(), Flavor::Minus).to_json();
    const auto b = compute_report(testutil::trefoil(), Flavor::Minus).to_json();
    CHECK(a == b);
    CHECK_FALSE(a.contains("timing_ms"));
    CHECK(a["diagram"]["name"] == "trefoil-lh");
    CHECK(a["module"]["tower"]["M"] == 2);
    const auto w = wrap_report(a);
    CHECK(w["version"] == std::string(version()));
    CHECK(w["report"] == a);
  }

  TEST_CASE("invariants report") {
    const auto r = invariants_report(testutil::builtin("figure-eight"));
    REQUIRE(r.invariants);
    CHECK(r.invariants->tau == 0);
    CHECK(r.flavor == "invariants");
    REQUIRE(r.ranks);
    CHECK(r.ranks->total() == 5);
    CHECK(r.to_text().find("tau") != std::string::npos);
  }

  TEST_CASE("fuzz is deterministic and passes") {
    FuzzOptions o;
    o.n = 4;
    o.trials = 4;
    o.moves = 6;
    o.seed = 3;
    const auto a = run_fuzz(o);
    const auto b = run_fuzz(o);
    CHECK(a.passed());
    CHECK(a.trials.size() == 4);
    CHECK(a.to_json() == b.to_json());
    for (const auto& t : a.trials) CHECK(t.moves.size() == 6);
  }

  TEST_CASE("exit codes") {
    CHECK(exit_code(ParseError("x")) == 1);
    CHECK(exit_code(ValidationError("x")) == 1);
    CHECK(exit_code(IllegalMove("x")) == 1);
    CHECK(exit_code(CapExceeded("x")) == 2);
    CHECK(exit_code(ConsistencyError("x")) == 3);
  }
}
