#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

namespace gridhom {

struct Bigrading {
  int maslov = 0;
  int alexander = 0;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

// Integer Laurent polynomial in t.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coefficient = 1);
  // (1 - t^-1)^power
  static LaurentPolynomial one_minus_inverse_t(int power);

  void add(int exponent, std::int64_t coefficient);
  std::int64_t coefficient(int exponent) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int lowest_exponent() const;
  int highest_exponent() const;

  LaurentPolynomial operator*(const LaurentPolynomial& other) const;
  LaurentPolynomial shifted(int by) const;
  LaurentPolynomial negated() const;
  // Quotient when other divides this exactly, otherwise nullopt.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  std::int64_t at_one() const;
  bool is_symmetric() const;

  // Lowest exponent first: "t^-1 - 1 + t".
  std::string to_string() const;
  // {"coeffs": {"-1": 1, "0": -1, "1": 1}}
  nlohmann::json to_json() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;
};

// Bigraded rank generating function in q (Maslov) and t (Alexander).
// Coefficients are signed so that division can report negative quotients,
// but ranks are always nonnegative.
class PoincarePolynomial {
 public:
  using Terms = std::map<Bigrading, std::int64_t>;

  void add(Bigrading g, std::int64_t coefficient);
  std::int64_t coefficient(Bigrading g) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t total() const;
  bool nonnegative() const;

  PoincarePolynomial operator+(const PoincarePolynomial& other) const;
  PoincarePolynomial shifted(Bigrading by) const;
  // Multiplied by (1 + q^-1 t^-1)^power.
  PoincarePolynomial times_w(int power) const;
  // Divided by (1 + q^-1 t^-1)^power when exact, otherwise nullopt.
  std::optional<PoincarePolynomial> divide_w(int power) const;

  // Substitutes q = -1.
  LaurentPolynomial euler_characteristic() const;

  // Terms by descending Maslov grading, e.g. "q^2t + q + t^-1".
  std::string to_string() const;
  // [{"M": 2, "A": 1, "rank": 1}, ...] in the same order as to_string.
  nlohmann::json to_json() const;

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  Terms terms_;
};

using BigradedRanks = PoincarePolynomial;

}  // namespace gridhom
