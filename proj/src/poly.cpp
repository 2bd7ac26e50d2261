#include "gridhom/poly.hpp"

#include <stdexcept>

namespace gridhom {

namespace {

std::string power(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// Joins signed terms as "a + b - c".
void append_term(std::string& out, std::int64_t c, const std::string& body) {
  const bool negative = c < 0;
  const std::int64_t mag = negative ? -c : c;
  std::string t = body.empty() ? std::to_string(mag) : (mag == 1 ? body : std::to_string(mag) + body);
  if (out.empty()) {
    out = negative ? "-" + t : t;
  } else {
    out += negative ? " - " : " + ";
    out += t;
  }
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coefficient) {
  LaurentPolynomial p;
  p.add(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::one_minus_inverse_t(int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  LaurentPolynomial base = monomial(0);
  base.add(-1, -1);
  LaurentPolynomial out = monomial(0);
  for (int i = 0; i < power; ++i) out = out * base;
  return out;
}

void LaurentPolynomial::add(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted && (it->second += coefficient) == 0) terms_.erase(it);
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::lowest_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::highest_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
  LaurentPolynomial out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) out.add(a + b, ca * cb);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::negated() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  LaurentPolynomial rest = *this;
  LaurentPolynomial quotient;
  const int dtop = divisor.highest_exponent();
  const int dlow = divisor.lowest_exponent();
  const std::int64_t lead = divisor.coefficient(dtop);
  while (!rest.is_zero()) {
    const int top = rest.highest_exponent();
    if (top - dtop < rest.lowest_exponent() - dlow) return std::nullopt;
    const std::int64_t c = rest.coefficient(top);
    if (c % lead != 0) return std::nullopt;
    const LaurentPolynomial step = monomial(top - dtop, c / lead);
    quotient.add(top - dtop, c / lead);
    const LaurentPolynomial sub = step * divisor;
    for (const auto& [e, v] : sub.terms_) rest.add(e, -v);
  }
  return quotient;
}

std::int64_t LaurentPolynomial::at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, power('t', e));
  return out;
}

nlohmann::json LaurentPolynomial::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = c;
  return {{"coeffs", coeffs}};
}

void PoincarePolynomial::add(Bigrading g, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, coefficient);
  if (!inserted && (it->second += coefficient) == 0) terms_.erase(it);
}

std::int64_t PoincarePolynomial::coefficient(Bigrading g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t PoincarePolynomial::total() const {
  std::int64_t s = 0;
  for (const auto& [g, c] : terms_) s += c;
  return s;
}

bool PoincarePolynomial::nonnegative() const {
  for (const auto& [g, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& other) const {
  PoincarePolynomial out = *this;
  for (const auto& [g, c] : other.terms_) out.add(g, c);
  return out;
}

PoincarePolynomial PoincarePolynomial::shifted(Bigrading by) const {
  PoincarePolynomial out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(Bigrading{g.maslov + by.maslov, g.alexander + by.alexander}, c);
  return out;
}

PoincarePolynomial PoincarePolynomial::times_w(int power) const {
  PoincarePolynomial out = *this;
  for (int i = 0; i < power; ++i) out = out + out.shifted({-1, -1});
  return out;
}

std::optional<PoincarePolynomial> PoincarePolynomial::divide_w(int power) const {
  PoincarePolynomial current = *this;
  for (int i = 0; i < power; ++i) {
    // P = Q (1 + z) with z = q^-1 t^-1: Q(g) = P(g) - Q(g + (1,1)), top down.
    PoincarePolynomial q;
    for (auto it = current.terms_.rbegin(); it != current.terms_.rend(); ++it) {
      const Bigrading g = it->first;
      q.add(g, it->second - q.coefficient({g.maslov + 1, g.alexander + 1}));
    }
    if (q.times_w(1) != current) return std::nullopt;
    current = std::move(q);
  }
  return current;
}

LaurentPolynomial PoincarePolynomial::euler_characteristic() const {
  LaurentPolynomial out;
  for (const auto& [g, c] : terms_) out.add(g.alexander, (g.maslov % 2 == 0) ? c : -c);
  return out;
}

std::string PoincarePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, it->second, power('q', it->first.maslov) + power('t', it->first.alexander));
  }
  return out;
}

nlohmann::json PoincarePolynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out.push_back({{"M", it->first.maslov}, {"A", it->first.alexander}, {"rank", it->second}});
  }
  return out;
}

}  // namespace gridhom
