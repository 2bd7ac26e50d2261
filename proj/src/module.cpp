#include "gridhom/module.hpp"

#include <algorithm>
#include <set>

#include "gridhom/errors.hpp"
#include "gridhom/random.hpp"

namespace gridhom {

nlohmann::json UModuleDecomposition::to_json() const {
  nlohmann::json bars = nlohmann::json::array();
  for (const auto& b : torsion) bars.push_back({{"M", b.maslov}, {"A", b.alexander}, {"b", b.length}});
  return {{"tower", {{"M", tower.maslov}, {"A", tower.alexander}}}, {"torsion", bars}};
}

MinusComplex::MinusComplex(const GridDiagram& d, MinusRoute route, int max_n) : route_(route) {
  gens_ = std::make_unique<GeneratorTable>(d, EnumerationOptions{max_n});
  rects_ = std::make_unique<RectangleTable>(d, *gens_, RectangleFilter::AvoidX);
  if (route == MinusRoute::FullVariables) monomials_ = std::make_unique<MonomialIndexer>(d.size());
}

int MinusComplex::tensor_power() const noexcept {
  return route_ == MinusRoute::Collapsed ? gens_->grid_size() - 1 : 0;
}

SparseBoundary MinusComplex::slice(int s) const {
  if (route_ == MinusRoute::Collapsed) return build_collapsed_slice(*gens_, *rects_, s);
  return build_minus_slice(*gens_, *rects_, *monomials_, s);
}

std::function<BasisLabel(BasisLabel)> MinusComplex::multiplication(int s, int variable) const {
  if (variable < 0 || variable >= grid_size()) throw ValidationError("U variable index out of range");
  if (route_ == MinusRoute::Collapsed) return [](BasisLabel l) { return l; };
  return [this, s, variable](BasisLabel l) {
    const int k = (*gens_)[l.generator].alexander - s;
    auto e = monomials_->unrank(k, l.monomial);
    ++e[static_cast<std::size_t>(variable)];
    return BasisLabel{l.generator, monomials_->rank(e)};
  };
}

std::map<int, gf2::Matrix> u_action(const Homology& from, int s, const Homology& to,
                                    const std::function<BasisLabel(BasisLabel)>& label_map) {
  std::set<int> maslovs;
  for (const auto& [g, h] : from.blocks()) {
    if (g.alexander == s) maslovs.insert(g.maslov);
  }
  for (const auto& [g, h] : to.blocks()) {
    if (g.alexander == s - 1) maslovs.insert(g.maslov + 2);
  }
  std::map<int, gf2::Matrix> out;
  for (const int m : maslovs) out.emplace(m, induced_map(from, {m, s}, to, {m - 2, s - 1}, label_map));
  return out;
}

void SliceSystem::add_slice(const BigradedRanks& ranks) {
  std::map<int, std::size_t> d;
  for (const auto& [g, r] : ranks.terms()) {
    if (r > 0) d[g.maslov] = static_cast<std::size_t>(r);
  }
  dims.push_back(std::move(d));
}

IntervalDecomposition decompose(const SliceSystem& system) {
  const std::size_t L = system.dims.size();
  if (system.u_maps.size() + 1 != L && L > 0) throw std::invalid_argument("decompose: slice and map counts disagree");
  auto s_of = [&](std::size_t i) { return system.top - static_cast<int>(i); };

  std::set<int> diagonals;
  for (std::size_t i = 0; i < L; ++i) {
    for (const auto& [m, r] : system.dims[i]) diagonals.insert(m - 2 * s_of(i));
  }

  IntervalDecomposition out;
  for (const int delta : diagonals) {
    std::vector<std::size_t> dim(L);
    for (std::size_t i = 0; i < L; ++i) {
      const auto it = system.dims[i].find(delta + 2 * s_of(i));
      dim[i] = it == system.dims[i].end() ? 0 : it->second;
    }
    auto step = [&](std::size_t i) {
      const auto& maps = system.u_maps[i];
      const auto it = maps.find(delta + 2 * s_of(i));
      if (it == maps.end()) return gf2::Matrix(dim[i + 1], dim[i]);
      if (it->second.rows() != dim[i + 1] || it->second.cols() != dim[i]) {
        throw ConsistencyError("U map dimensions disagree with slice ranks");
      }
      return it->second;
    };
    // r[a][b]: rank of the composite from slice a down to slice b >= a.
    std::vector<std::vector<std::size_t>> r(L, std::vector<std::size_t>(L, 0));
    for (std::size_t a = 0; a < L; ++a) {
      r[a][a] = dim[a];
      gf2::Matrix p = gf2::Matrix::identity(dim[a]);
      for (std::size_t b = a + 1; b < L; ++b) {
        p = gf2::multiply(step(b - 1), p);
        r[a][b] = gf2::rank(p);
      }
    }
    auto rank_at = [&](std::ptrdiff_t a, std::size_t b) -> long long {
      if (a < 0) return 0;
      return static_cast<long long>(r[static_cast<std::size_t>(a)][b]);
    };
    for (std::size_t a = 0; a < L; ++a) {
      const auto ia = static_cast<std::ptrdiff_t>(a);
      for (std::size_t b = a; b < L; ++b) {
        long long count = rank_at(ia, b) - rank_at(ia - 1, b);
        if (b + 1 < L) count -= rank_at(ia, b + 1) - rank_at(ia - 1, b + 1);
        if (count < 0) throw ConsistencyError("negative interval multiplicity");
        const int s = s_of(a);
        for (long long c = 0; c < count; ++c) {
          if (b + 1 < L) {
            out.closed.push_back({delta + 2 * s, s, static_cast<int>(b - a + 1)});
          } else {
            out.open.push_back({delta + 2 * s, s});
          }
        }
      }
    }
  }
  std::sort(out.closed.begin(), out.closed.end());
  std::sort(out.open.begin(), out.open.end());
  return out;
}

std::optional<UModuleDecomposition> assemble_module(const IntervalDecomposition& intervals, int tensor_power) {
  PoincarePolynomial open;
  for (const auto& g : intervals.open) open.add(g, 1);
  const auto towers = open.divide_w(tensor_power);
  if (!towers || towers->terms().size() != 1 || towers->terms().begin()->second != 1) return std::nullopt;

  UModuleDecomposition m;
  m.tower = towers->terms().begin()->first;
  std::map<int, PoincarePolynomial> by_length;
  for (const auto& b : intervals.closed) by_length[b.length].add({b.maslov, b.alexander}, 1);
  for (const auto& [length, poly] : by_length) {
    const auto q = poly.divide_w(tensor_power);
    if (!q || !q->nonnegative()) throw ConsistencyError("torsion bars do not deconvolve exactly");
    for (const auto& [g, c] : q->terms()) {
      for (std::int64_t i = 0; i < c; ++i) m.torsion.push_back({g.maslov, g.alexander, length});
    }
  }
  std::sort(m.torsion.begin(), m.torsion.end());
  return m;
}

PoincarePolynomial hat_from_tilde(const PoincarePolynomial& tilde, int n) {
  const auto q = tilde.divide_w(n - 1);
  if (!q) throw ConsistencyError("tilde polynomial is not divisible by the tensor factor");
  if (!q->nonnegative()) throw ConsistencyError("tensor factor quotient has a negative coefficient");
  return *q;
}

PoincarePolynomial uct_prediction(const UModuleDecomposition& m) {
  PoincarePolynomial p;
  p.add(m.tower, 1);
  for (const auto& b : m.torsion) {
    p.add({b.maslov, b.alexander}, 1);
    p.add({b.maslov - 2 * b.length + 1, b.alexander - b.length}, 1);
  }
  return p;
}

bool uct_check(const UModuleDecomposition& m, const PoincarePolynomial& hat) {
  return hat.total() == 1 + 2 * static_cast<std::int64_t>(m.torsion.size()) && uct_prediction(m) == hat;
}

SparseBoundary permute_basis(const SparseBoundary& b, std::uint64_t seed) {
  Rng rng(seed);
  SparseBoundary out(b.generator_capacity());
  for (const auto& [g, blk] : b.blocks()) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> runs;  // generator, monomial count
    for (const auto& l : blk.basis) {
      if (runs.empty() || runs.back().first != l.generator) {
        runs.emplace_back(l.generator, 0);
      }
      ++runs.back().second;
    }
    rng.shuffle(std::span(runs));
    for (const auto& [gen, count] : runs) out.add_generator(g, gen, count);
  }
  for (auto& [g, blk] : out.blocks()) blk.columns.resize(blk.basis.size());
  for (const auto& [g, blk] : b.blocks()) {
    const auto* target = b.find({g.maslov - 1, g.alexander});
    auto& dst = out.block(g);
    for (std::size_t j = 0; j < blk.basis.size(); ++j) {
      auto& col = dst.columns[*out.index_of(blk.basis[j])];
      for (const auto i : blk.columns[j]) col.push_back(*out.index_of(target->basis[i]));
      std::sort(col.begin(), col.end());
    }
  }
  return out;
}

MinusResult compute_minus(const GridDiagram& d, const MinusOptions& options) {
  if (options.stability_window < 1) throw ValidationError("stability window must be positive");
  if (options.slice_budget < 1) throw ValidationError("slice budget must be positive");
  const MinusComplex mc(d, options.route, options.max_n);
  const auto& gens = mc.generators();
  const int n = gens.grid_size();
  if (options.u_variable < 0 || options.u_variable >= n) throw ValidationError("U variable index out of range");

  MinusResult result;
  {
    const RectangleTable tilde_rects(d, gens, RectangleFilter::AvoidAllMarkers);
    const SparseBoundary tilde = build_tilde(gens, tilde_rects);
    if (!verify_d_squared(tilde)) throw ConsistencyError("tilde differential does not square to zero");
    result.tilde = homology_ranks(tilde);
  }
  result.hat = hat_from_tilde(result.tilde, n);

  SliceSystem system;
  system.top = gens.max_alexander();
  result.top_slice = system.top;
  std::optional<Homology> previous;
  int iso_run = 0;
  for (int step = 0; step <= options.slice_budget; ++step) {
    const int s = system.top - step;
    SparseBoundary b = mc.slice(s);
    if (!verify_d_squared(b)) throw ConsistencyError("minus slice " + std::to_string(s) + " has nonzero d^2");
    if (options.basis_seed) b = permute_basis(b, options.basis_seed + static_cast<std::uint64_t>(step));
    Homology h(std::move(b));
    if (previous) {
      auto maps = u_action(*previous, s + 1, h, mc.multiplication(s + 1, options.u_variable));
      const bool iso = std::all_of(maps.begin(), maps.end(), [](const auto& kv) {
        return kv.second.rows() == kv.second.cols() && gf2::rank(kv.second) == kv.second.rows();
      });
      iso_run = iso ? iso_run + 1 : 0;
      system.u_maps.push_back(std::move(maps));
    }
    system.add_slice(h.ranks());
    previous = std::move(h);
    if (iso_run < options.stability_window) continue;

    const auto module = assemble_module(decompose(system), mc.tensor_power());
    if (!module || 1 + 2 * static_cast<std::int64_t>(module->torsion.size()) != result.hat.total()) continue;
    if (!uct_check(*module, result.hat)) {
      throw ConsistencyError("universal coefficient bigradings disagree with the hat homology");
    }
    result.module = *module;
    result.bottom_slice = s;
    return result;
  }
  throw ConsistencyError("termination certificate not reached within " + std::to_string(options.slice_budget) +
                         " slices");
}

}  // namespace gridhom
