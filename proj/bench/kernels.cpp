// Parallel kernels against the serial reference implementations.

#include <benchmark/benchmark.h>

#include <vector>

#include "gridhom/complex.hpp"
#include "gridhom/generators.hpp"
#include "gridhom/gf2.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/moves.hpp"
#include "gridhom/random.hpp"
#include "gridhom/rectangles.hpp"
#include "gridhom/reference.hpp"

namespace {

using namespace gridhom;

std::vector<std::vector<std::uint32_t>> random_columns(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<std::uint32_t>> cols(dim);
  for (auto& c : cols) {
    for (int k = 0; k < 6; ++k) c.push_back(static_cast<std::uint32_t>(rng.below(dim)));
  }
  return cols;
}

void BM_RankDense(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto cols = random_columns(dim, 1);
  const auto m = gf2::Matrix::from_columns(dim, dim, cols);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(m));
}
BENCHMARK(BM_RankDense)->Arg(256)->Arg(1024)->Arg(4096);

void BM_RankSparseReference(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto cols = random_columns(dim, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::sparse_rank(cols));
}
BENCHMARK(BM_RankSparseReference)->Arg(256)->Arg(1024);

void BM_Gradings(benchmark::State& state) {
  const auto d = random_grid(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(GeneratorTable(d).max_maslov());
}
BENCHMARK(BM_Gradings)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RectangleTable(benchmark::State& state) {
  const auto d = random_grid(static_cast<int>(state.range(0)), 7);
  const GeneratorTable gens(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RectangleTable(d, gens, RectangleFilter::AvoidX).edge_count());
  }
}
BENCHMARK(BM_RectangleTable)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TildeHomology(benchmark::State& state) {
  const auto d = random_grid(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(homology_ranks(build_tilde(d)).total());
}
BENCHMARK(BM_TildeHomology)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TildeHomologyReference(benchmark::State& state) {
  const auto d = random_grid(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reference::tilde_ranks(d).total());
}
BENCHMARK(BM_TildeHomologyReference)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
