#include "doctest.h"
#include "gridhom/poly.hpp"
#include "frozen.hpp"

using namespace gridhom;

TEST_SUITE("poly") {
  TEST_CASE("Laurent polynomial arithmetic and rendering") {
    auto p = LaurentPolynomial::monomial(-1) * LaurentPolynomial::one_minus_inverse_t(2);
    CHECK(p.to_string() == "t^-3 - 2t^-2 + t^-1");
    CHECK(p.lowest_exponent() == -3);
    CHECK(p.highest_exponent() == -1);
    CHECK(p.at_one() == 0);
    CHECK(p.shifted(2).to_string() == "t^-1 - 2 + t");
    CHECK(p.shifted(2).is_symmetric());
    CHECK(p.negated().coefficient(-2) == 2);
    const auto q = p.divide_exact(LaurentPolynomial::one_minus_inverse_t(1));
    REQUIRE(q);
    CHECK(*q == LaurentPolynomial::monomial(-1) * LaurentPolynomial::one_minus_inverse_t(1));
    CHECK_FALSE(LaurentPolynomial::monomial(0, 3).divide_exact(LaurentPolynomial::one_minus_inverse_t(1)));
    CHECK(LaurentPolynomial::monomial(0).to_string() == "1");
    CHECK(LaurentPolynomial{}.to_string() == "0");
    CHECK(LaurentPolynomial::monomial(2, -3).to_string() == "-3t^2");
    CHECK(p.shifted(2).to_json().dump() == R"({"coeffs":{"-1":1,"0":-2,"1":1}})");
    LaurentPolynomial z;
    z.add(1, 2);
    z.add(1, -2);
    CHECK(z.is_zero());
  }

  TEST_CASE("Poincare polynomial") {
    const auto h = frozen::trefoil_hat();
    CHECK(h.to_string() == "q^2t + q + t^-1");
    CHECK(frozen::trefoil_rh_hat().to_string() == "t + q^-1 + q^-2t^-1");
    CHECK(h.total() == 3);
    CHECK(h.times_w(4) == frozen::trefoil_tilde());
    CHECK(h.times_w(4).divide_w(4) == h);
    CHECK_FALSE(h.divide_w(1));
    CHECK(h.euler_characteristic().to_string() == "t^-1 - 1 + t");
    CHECK(h.shifted({1, 1}).coefficient({3, 2}) == 1);
    CHECK((h + h).coefficient({1, 0}) == 2);
    CHECK(h.to_json().dump() == R"([{"A":1,"M":2,"rank":1},{"A":0,"M":1,"rank":1},{"A":-1,"M":0,"rank":1}])");
    PoincarePolynomial neg;
    neg.add({0, 0}, -1);
    CHECK_FALSE(neg.nonnegative());
  }
}
