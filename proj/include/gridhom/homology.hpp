#pragma once

#include <functional>
#include <map>

#include "gridhom/complex.hpp"
#include "gridhom/gf2.hpp"
#include "gridhom/poly.hpp"

namespace gridhom {

// Homology of one bigrading block, with cycle representatives whose classes
// form a basis.
class HomologyBlock {
 public:
  HomologyBlock(Bigrading g, std::size_t chain_dimension) : grading_(g), reducer_(chain_dimension) {}

  Bigrading grading() const noexcept { return grading_; }
  std::size_t rank() const noexcept { return representatives_.size(); }
  const std::vector<gf2::BitVector>& representatives() const noexcept { return representatives_; }

  // Class of a cycle in the representative basis. Throws ConsistencyError if
  // the vector is not a cycle of this block.
  gf2::BitVector coordinates(gf2::BitVector cycle) const;

 private:
  friend class Homology;
  Bigrading grading_;
  std::vector<gf2::BitVector> representatives_;
  // boundaries first (untagged), then representatives tagged by index
  gf2::XorBasis reducer_;
};

class Homology {
 public:
  explicit Homology(SparseBoundary complex);

  const SparseBoundary& complex() const noexcept { return complex_; }
  const std::map<Bigrading, HomologyBlock>& blocks() const noexcept { return blocks_; }
  const HomologyBlock* block(Bigrading g) const;
  BigradedRanks ranks() const;

 private:
  SparseBoundary complex_;
  std::map<Bigrading, HomologyBlock> blocks_;
};

// Ranks only (dim ker - dim im per block), no representatives.
BigradedRanks homology_ranks(const SparseBoundary& b);

// Map on homology induced by a chain map that sends each basis label to a
// single basis label one grading block down (multiplication by a variable).
// Source block `from_grading` of `from`; the images land in block
// `to_grading` of `to`. Rows index the target class basis.
gf2::Matrix induced_map(const Homology& from, Bigrading from_grading, const Homology& to, Bigrading to_grading,
                        const std::function<BasisLabel(BasisLabel)>& label_map);

}  // namespace gridhom
