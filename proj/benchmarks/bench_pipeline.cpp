#include <benchmark/benchmark.h>

#include "latpd/mobius.hpp"
#include "support/generators.hpp"

using namespace latpd;

namespace {

// A 2 x n grid filtration of a small complex: interval counts grow
// quadratically in n, which is what dominates bd and the inversion.
Filtration grid_filtration(int n) {
  testgen::Rng rng(12345);
  MetricLattice index = testgen::grid_lattice(2, n);
  SimplicialComplex complex = validate_complex({{0, 1, 2}, {1, 2, 3}, {3, 4}, {4, 5}, {0, 5}});
  return testgen::random_filtration(rng, index, complex);
}

void bd_grid(benchmark::State& state) {
  Filtration f = grid_filtration(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bd(f, 1));
  state.SetComplexityN(state.range(0));
}

void mobius_chain(benchmark::State& state) {
  testgen::Rng rng(777);
  IntervalLattice bars(testgen::chain_lattice(static_cast<int>(state.range(0))));
  IntervalFunction f = mobius_sum(testgen::random_function(rng, bars, 0, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_invert(f));
  state.SetComplexityN(state.range(0));
}

void pd_grid(benchmark::State& state) {
  Filtration f = grid_filtration(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_invert(bd(f, 1)));
}

} // namespace

BENCHMARK(bd_grid)->DenseRange(2, 8, 2)->Complexity();
BENCHMARK(mobius_chain)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(pd_grid)->DenseRange(2, 6, 2);
