#include <benchmark/benchmark.h>

#include "kpath/directed.hpp"
#include "kpath/gen.hpp"
#include "kpath/undirected.hpp"

using namespace kpath;

namespace {

// full directed decision; cost is trials * 2^k walk-polynomial evaluations
void BM_directed_kpath(benchmark::State& state) {
  const Digraph g = random_digraph(50, 0.3, 987654321);
  const TestParams params{1, 31337, gf::config_for_width(64)};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(directed_kpath(g, k, params));
  }
}

// full undirected decision on a small graph
void BM_undirected_kpath(benchmark::State& state) {
  const Ugraph g = random_ugraph(16, 0.3, 24680);
  const TestParams params{1, 555, gf::config_for_width(64)};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(undirected_kpath(g, k, params, 1));
  }
}

}  // namespace

BENCHMARK(BM_directed_kpath)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_undirected_kpath)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
