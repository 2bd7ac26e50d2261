#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gridhom/grid.hpp"

namespace gridhom {

// Hard ceiling for full enumeration; 12! generators is already out of reach.
inline constexpr int kMaxGeneratorGrid = 12;

using Permutation = std::array<std::uint8_t, kMaxGeneratorGrid>;

// A matching of vertical to horizontal circles: the point (i, sigma[i]) for
// each column i, with its gradings cached.
struct Generator {
  Permutation sigma{};
  int maslov = 0;
  int alexander = 0;
};

struct EnumerationOptions {
  int max_n = 9;
};

// All n! generators of a knot diagram, indexed by the lexicographic rank of
// sigma. Construction is parallel over generator chunks.
class GeneratorTable {
 public:
  explicit GeneratorTable(const GridDiagram& d, const EnumerationOptions& options = {});

  int grid_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const Generator& operator[](std::size_t id) const { return generators_[id]; }
  std::span<const Generator> generators() const noexcept { return generators_; }

  // Lexicographic rank of a permutation of {0, ..., n-1}.
  std::uint32_t id_of(const Permutation& sigma) const noexcept;

  int max_alexander() const noexcept { return max_alexander_; }
  int min_alexander() const noexcept { return min_alexander_; }
  int max_maslov() const noexcept { return max_maslov_; }
  int min_maslov() const noexcept { return min_maslov_; }

 private:
  int n_;
  std::vector<Generator> generators_;
  int max_alexander_ = 0, min_alexander_ = 0, max_maslov_ = 0, min_maslov_ = 0;
};

Permutation unrank_permutation(std::uint64_t rank, int n);
std::uint64_t rank_permutation(const Permutation& sigma, int n) noexcept;
std::uint64_t factorial(int n);

// Maslov grading with respect to the O (or X) markers, evaluated in the planar
// fundamental domain with generator points at lattice points and markers at
// cell centres.
int maslov_grading(const GridDiagram& d, std::span<const int> sigma, Marker markers);
// (M_O - M_X - (n - 1)) / 2. Throws ValidationError if that is not an integer,
// which only happens for links.
int alexander_grading(const GridDiagram& d, std::span<const int> sigma);

namespace testing {
// Fault injection for the self-test mutation check: adds `shift` to every
// cached generator Maslov grading. Zero restores normal behaviour.
void set_maslov_fault(int shift) noexcept;
int maslov_fault() noexcept;
}  // namespace testing

}  // namespace gridhom
