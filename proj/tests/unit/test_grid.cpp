#include <string>

#include "doctest.h"
#include "gridhom/builtins.hpp"
#include "gridhom/errors.hpp"
#include "gridhom/grid.hpp"
#include "helpers.hpp"

using namespace gridhom;

TEST_SUITE("grid") {
  TEST_CASE("parse canonical text") {
    const auto d = parse_grid("n=5\nO=2 3 4 0 1\nX=0 1 2 3 4");
    CHECK(d == testutil::trefoil());
    CHECK(parse_grid("n=1\nO=0\nX=0") == testutil::g1());
    CHECK(parse_grid("# comment\n\nn=2\nO=1 0\nX=0 1\n") == testutil::g2());
  }

  TEST_CASE("parse JSON") {
    CHECK(parse_grid(R"({"n":3,"O":[2,0,1],"X":[1,2,0]})") == testutil::g3());
    CHECK(grid_from_json(grid_to_json(testutil::trefoil())) == testutil::trefoil());
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_grid("n=2\nO=0 0\nX=0 1"), ValidationError);
    CHECK_THROWS_AS(parse_grid("n=2\nO=0 2\nX=0 1"), ValidationError);
    CHECK_THROWS_AS(parse_grid("n=0\nO=\nX="), Error);
    CHECK_THROWS_AS(parse_grid("n=2\nO=0 1"), ParseError);
    CHECK_THROWS_AS(parse_grid("n=two\nO=0 1\nX=1 0"), ParseError);
    CHECK_THROWS_AS(parse_grid("n=3\nO=0 1\nX=1 0"), Error);
    CHECK_THROWS_AS(parse_grid(R"({"n":2,"O":[0,1]})"), ParseError);
    CHECK_THROWS_AS(parse_grid("{not json"), ParseError);
  }

  TEST_CASE("serialize is canonical and round-trips") {
    const std::string canonical = "n=5\nO=2 3 4 0 1\nX=0 1 2 3 4\n";
    CHECK(serialize_grid(parse_grid(canonical)) == canonical);
    CHECK(serialize_grid(parse_grid("# trefoil\nn=5\nO=2  3 4 0 1\nX=0 1 2 3 4")) == canonical);
    for (const auto& d : testutil::random_knots(30, 2, 8, 5)) CHECK(parse_grid(serialize_grid(d)) == d);
  }

  TEST_CASE("validate warns on coincident cells only") {
    const auto w = validate(testutil::g1());
    REQUIRE(w.size() == 1);
    CHECK(w[0].column == 0);
    CHECK(validate(testutil::trefoil()).empty());
    CHECK(validate(GridDiagram({0, 1}, {0, 1})).size() == 2);
  }

  TEST_CASE("component count") {
    CHECK(component_count(testutil::trefoil()) == 1);
    CHECK(component_count(testutil::g2()) == 1);
    CHECK(component_count(GridDiagram({0, 1}, {0, 1})) == 2);
    CHECK(component_count(testutil::g1()) == 1);
    CHECK_THROWS_AS(require_knot(GridDiagram({0, 1}, {0, 1})), ValidationError);
  }

  TEST_CASE("symmetries") {
    const auto t = testutil::trefoil();
    CHECK(mirror(mirror(t)) == t);
    CHECK(transpose(transpose(t)) == t);
    CHECK(translate(t, 5, 5) == t);
    CHECK(translate(translate(t, 2, 3), 3, 2) == t);
    for (const auto& d : testutil::random_knots(20, 3, 7, 11)) {
      CHECK(is_knot(mirror(d)));
      CHECK(is_knot(transpose(d)));
      CHECK(is_knot(translate(d, 1, 2)));
      CHECK(canonical_form(d) == canonical_form(translate(d, 2, 1)));
      CHECK(canonical_form(d) == canonical_form(transpose(d)));
      CHECK(canonical_hash(d) == canonical_hash(translate(transpose(d), 1, 3)));
    }
  }

  TEST_CASE("canonical hash format") {
    const auto h = canonical_hash(testutil::trefoil());
    CHECK(h.size() == 16);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(canonical_hash(testutil::trefoil()) != canonical_hash(testutil::g3()));
  }

  TEST_CASE("ascii rendering") {
    CHECK(render_ascii(testutil::g1()) == "*\n");
    CHECK(render_ascii(testutil::g2()) == "OX\nXO\n");
  }

  TEST_CASE("builtin table") {
    const auto& table = builtin_grids();
    CHECK(table.size() >= 5);
    for (const char* name : {"unknot-1", "unknot-2", "unknot-3", "trefoil-lh", "trefoil-rh", "figure-eight"}) {
      const auto* b = find_builtin(name);
      REQUIRE(b != nullptr);
      CHECK(is_knot(b->diagram));
      CHECK(identify_builtin(b->diagram) == b);
      CHECK(identify_builtin(translate(b->diagram, 1, 1)) == b);
    }
    CHECK(find_builtin("trefoil") == find_builtin("trefoil-lh"));
    CHECK(find_builtin("trefoil-rh")->diagram == mirror(testutil::trefoil()));
    CHECK(find_builtin("no-such-knot") == nullptr);
  }
}
