#include <benchmark/benchmark.h>

#include "latpd/distances.hpp"
#include "support/generators.hpp"

using namespace latpd;

namespace {

Diagram dense_diagram(testgen::Rng& rng, int chain_elems, int classes) {
  MetricLattice chain = testgen::random_embedded_chain(rng, chain_elems);
  IntervalLattice bars(chain);
  std::vector<int64_t> values(bars.count(), 0);
  for (int k = 0; k < classes; ++k)
    values[testgen::pick(rng, 0, bars.count() - 1)] += testgen::pick(rng, 1, 2);
  return make_diagram(IntervalFunction(bars, std::move(values)));
}

void bottleneck_random(benchmark::State& state) {
  testgen::Rng rng(424242);
  const int classes = static_cast<int>(state.range(0));
  Diagram sigma = dense_diagram(rng, 8, classes);
  Diagram tau = dense_diagram(rng, 8, classes);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(sigma, tau));
  state.SetComplexityN(classes);
}

void witness_random(benchmark::State& state) {
  testgen::Rng rng(171717);
  const int classes = static_cast<int>(state.range(0));
  Diagram sigma = dense_diagram(rng, 6, classes);
  Diagram tau = dense_diagram(rng, 6, classes);
  Matching matching = bottleneck(sigma, tau).matching;
  for (auto _ : state) benchmark::DoNotOptimize(witness_path(sigma, tau, matching));
}

} // namespace

BENCHMARK(bottleneck_random)->RangeMultiplier(2)->Range(4, 32)->Complexity();
BENCHMARK(witness_random)->DenseRange(2, 10, 4);
