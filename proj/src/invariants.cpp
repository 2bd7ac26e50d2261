#include "gridhom/invariants.hpp"

#include <vector>

#include "gridhom/errors.hpp"

namespace gridhom {

int tau(const UModuleDecomposition& m) { return -m.tower.alexander; }

LaurentPolynomial symmetrize(const LaurentPolynomial& p) {
  if (p.is_zero()) throw ConsistencyError("cannot symmetrize the zero polynomial");
  const int span_sum = p.lowest_exponent() + p.highest_exponent();
  if (span_sum % 2 != 0) throw ConsistencyError("polynomial has no symmetric shift: " + p.to_string());
  LaurentPolynomial q = p.shifted(-span_sum / 2);
  if (!q.is_symmetric()) throw ConsistencyError("polynomial is not symmetric up to a shift: " + p.to_string());
  const auto one = q.at_one();
  if (one == -1) q = q.negated();
  else if (one != 1) throw ConsistencyError("polynomial does not evaluate to +-1 at t = 1: " + p.to_string());
  return q;
}

LaurentPolynomial generator_euler_quotient(const GeneratorTable& gens) {
  const int lo = gens.min_alexander();
  const auto width = static_cast<std::size_t>(gens.max_alexander() - lo + 1);
  std::vector<std::int64_t> sum(width, 0);
  const auto count = static_cast<long long>(gens.size());
#pragma omp parallel
  {
    std::vector<std::int64_t> local(width, 0);
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < count; ++i) {
      const Generator& g = gens[static_cast<std::size_t>(i)];
      local[static_cast<std::size_t>(g.alexander - lo)] += (g.maslov % 2 == 0) ? 1 : -1;
    }
#pragma omp critical
    for (std::size_t j = 0; j < width; ++j) sum[j] += local[j];
  }
  LaurentPolynomial chi;
  for (std::size_t j = 0; j < width; ++j) chi.add(lo + static_cast<int>(j), sum[j]);
  const auto q = chi.divide_exact(LaurentPolynomial::one_minus_inverse_t(gens.grid_size() - 1));
  if (!q) throw ConsistencyError("generator Euler characteristic is not divisible by (1 - t^-1)^(n-1)");
  return *q;
}

LaurentPolynomial alexander_from_generators(const GeneratorTable& gens) {
  return symmetrize(generator_euler_quotient(gens));
}

LaurentPolynomial alexander_from_generators(const GridDiagram& d, const EnumerationOptions& options) {
  return alexander_from_generators(GeneratorTable(d, options));
}

LaurentPolynomial alexander_from_homology(const PoincarePolynomial& hat) {
  return symmetrize(hat.euler_characteristic());
}

int genus(const PoincarePolynomial& hat) {
  if (hat.is_zero()) throw ConsistencyError("genus of zero homology");
  int top = hat.terms().begin()->first.alexander;
  int bottom = top;
  for (const auto& [g, c] : hat.terms()) {
    top = std::max(top, g.alexander);
    bottom = std::min(bottom, g.alexander);
  }
  if (top != -bottom) throw ConsistencyError("hat homology has asymmetric Alexander support");
  return top;
}

}  // namespace gridhom
