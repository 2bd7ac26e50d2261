#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gridhom/complex.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/poly.hpp"
#include "json.hpp"

namespace gridhom {

// F[U]/U^length generated in bigrading (maslov, alexander).
struct TorsionBar {
  int maslov = 0;
  int alexander = 0;
  int length = 1;
  friend auto operator<=>(const TorsionBar&, const TorsionBar&) = default;
};

struct UModuleDecomposition {
  Bigrading tower;
  std::vector<TorsionBar> torsion;  // sorted

  // {"tower":{"M":..,"A":..},"torsion":[{"M":..,"A":..,"b":..}]}
  nlohmann::json to_json() const;
  friend bool operator==(const UModuleDecomposition&, const UModuleDecomposition&) = default;
};

enum class MinusRoute {
  // One variable U for all O markers; the homology is the minus homology
  // tensored with (n-1) copies of a two-dimensional factor, removed afterwards
  // by exact division.
  Collapsed,
  // Independent variables V_0..V_{n-1}, U acting as one of them.
  FullVariables,
};

struct MinusOptions {
  MinusRoute route = MinusRoute::Collapsed;
  int stability_window = 3;
  int slice_budget = 64;
  int max_n = 7;
  int u_variable = 0;
  // Nonzero: shuffle the basis of every slice before elimination.
  std::uint64_t basis_seed = 0;
};

// Owns the generator and rectangle tables for the minus slices of one
// diagram.
class MinusComplex {
 public:
  MinusComplex(const GridDiagram& d, MinusRoute route, int max_n);

  MinusRoute route() const noexcept { return route_; }
  const GeneratorTable& generators() const noexcept { return *gens_; }
  int grid_size() const noexcept { return gens_->grid_size(); }
  // Power of the two-dimensional factor carried by the slice homology.
  int tensor_power() const noexcept;

  SparseBoundary slice(int s) const;
  // Basis map of multiplication by V_variable (collapsed route: by U) from
  // slice s to slice s - 1.
  std::function<BasisLabel(BasisLabel)> multiplication(int s, int variable) const;

 private:
  MinusRoute route_;
  std::unique_ptr<GeneratorTable> gens_;
  std::unique_ptr<RectangleTable> rects_;
  std::unique_ptr<MonomialIndexer> monomials_;
};

// Induced U maps H(s)_M -> H(s-1)_{M-2}, keyed by the source Maslov grading
// (every Maslov grading supported in either slice appears).
std::map<int, gf2::Matrix> u_action(const Homology& from, int s, const Homology& to,
                                    const std::function<BasisLabel(BasisLabel)>& label_map);

// The one-parameter systems H(top) -> H(top-1) -> ... -> H(bottom).
struct SliceSystem {
  int top = 0;
  std::vector<std::map<int, std::size_t>> dims;      // dims[i][M] for s = top - i
  std::vector<std::map<int, gf2::Matrix>> u_maps;    // u_maps[i]: s = top - i to s - 1

  int bottom() const noexcept { return top - static_cast<int>(dims.size()) + 1; }
  void add_slice(const BigradedRanks& ranks);
};

struct IntervalDecomposition {
  std::vector<TorsionBar> closed;
  std::vector<Bigrading> open;  // tops of intervals still alive at the bottom slice
};

// Interval decomposition per diagonal M - 2A via ranks of composite maps.
IntervalDecomposition decompose(const SliceSystem& system);

// Deconvolves the tensor factor and requires exactly one open interval.
// Returns nullopt when the open intervals are not yet a single tower.
std::optional<UModuleDecomposition> assemble_module(const IntervalDecomposition& intervals, int tensor_power);

// Tilde polynomial divided exactly by (1 + q^-1 t^-1)^(n-1). Throws
// ConsistencyError on an inexact or negative quotient.
PoincarePolynomial hat_from_tilde(const PoincarePolynomial& tilde, int n);

// Hat polynomial predicted from a decomposition: each summand contributes its
// top, each bar also (M - 2b + 1, A - b).
PoincarePolynomial uct_prediction(const UModuleDecomposition& m);
bool uct_check(const UModuleDecomposition& m, const PoincarePolynomial& hat);

struct MinusResult {
  UModuleDecomposition module;
  PoincarePolynomial tilde;
  PoincarePolynomial hat;
  int top_slice = 0;
  int bottom_slice = 0;
};

// Descends through the slices from the top Alexander grading until the
// certificate holds: the U map has been an isomorphism for
// stability_window steps, the open intervals deconvolve to one tower, and
// 1 + 2 #bars equals the hat dimension. Throws ConsistencyError if the
// budget runs out or the final bigraded check fails.
MinusResult compute_minus(const GridDiagram& d, const MinusOptions& options = {});

// The basis of every block reordered (generators shuffled, monomials of one
// generator kept together), columns remapped accordingly.
SparseBoundary permute_basis(const SparseBoundary& b, std::uint64_t seed);

}  // namespace gridhom
