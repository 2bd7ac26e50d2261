#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gridhom/generators.hpp"
#include "gridhom/gf2.hpp"
#include "gridhom/poly.hpp"
#include "gridhom/rectangles.hpp"
#include "json.hpp"

namespace gridhom {

// A chain-group basis element: a generator times a monomial. `monomial` is
// the rank of the exponent vector among vectors of the same total degree
// (see MonomialIndexer); it is 0 in the tilde complex and in the collapsed
// one-variable slices.
struct BasisLabel {
  std::uint32_t generator = 0;
  std::uint32_t monomial = 0;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

// Ranks compositions e of a degree k into n nonnegative parts, via stars and
// bars and the colexicographic order on (n-1)-subsets.
class MonomialIndexer {
 public:
  explicit MonomialIndexer(int parts);

  int parts() const noexcept { return parts_; }
  std::uint64_t count(int degree) const;
  std::uint32_t rank(std::span<const int> exponents) const;
  std::vector<int> unrank(int degree, std::uint64_t rank) const;

 private:
  std::uint64_t binomial(int n, int k) const;

  int parts_;
  std::vector<std::vector<std::uint64_t>> binomials_;
};

// One bigrading block of a differential: the basis of C_(M,A) and, for each
// basis element, its boundary as indices into the basis of C_(M-1,A).
struct BoundaryBlock {
  Bigrading grading;
  std::vector<BasisLabel> basis;
  std::vector<std::vector<std::uint32_t>> columns;
};

class SparseBoundary {
 public:
  SparseBoundary() = default;
  explicit SparseBoundary(std::size_t generator_count) : offset_(generator_count, kAbsent) {}

  const std::map<Bigrading, BoundaryBlock>& blocks() const noexcept { return blocks_; }
  std::map<Bigrading, BoundaryBlock>& blocks() noexcept { return blocks_; }
  const BoundaryBlock* find(Bigrading g) const;
  BoundaryBlock& block(Bigrading g);

  // Adds the basis elements (generator, 0..monomials-1) to the block g.
  void add_generator(Bigrading g, std::uint32_t generator, std::uint32_t monomials);
  // Index inside the block the generator was added to.
  std::optional<std::uint32_t> index_of(BasisLabel label) const;

  std::size_t generator_capacity() const noexcept { return offset_.size(); }
  std::size_t dimension() const;
  std::size_t nonzeros() const;

  // Dense matrix of the block map C_g -> C_(g.maslov-1, g.alexander).
  gf2::Matrix matrix(Bigrading g) const;
  std::size_t target_dimension(Bigrading g) const;

  // Per-block dimensions and nonzero counts.
  nlohmann::json debug_json() const;

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffU;

  std::map<Bigrading, BoundaryBlock> blocks_;
  std::vector<std::uint32_t> offset_;
};

// Tilde differential: empty rectangles avoiding every marker.
SparseBoundary build_tilde(const GeneratorTable& gens, const RectangleTable& avoid_all);
SparseBoundary build_tilde(const GridDiagram& d, const EnumerationOptions& options = {});

// Alexander slice s of the minus complex over F[V_0, ..., V_{n-1}]. Basis
// (x, e) with |e| = A(x) - s, in Maslov grading M(x) - 2|e|.
SparseBoundary build_minus_slice(const GeneratorTable& gens, const RectangleTable& avoid_x,
                                 const MonomialIndexer& monomials, int s);

// Alexander slice s of the complex with every V_i set to one variable U:
// basis (x, U^k) with k = A(x) - s, edges weighted U^{#O}. Its homology is
// the minus homology tensored with an (n-1)-fold two-dimensional factor.
SparseBoundary build_collapsed_slice(const GeneratorTable& gens, const RectangleTable& avoid_x, int s);

// Checks that the composite of consecutive blocks vanishes everywhere.
bool verify_d_squared(const SparseBoundary& b);

}  // namespace gridhom
