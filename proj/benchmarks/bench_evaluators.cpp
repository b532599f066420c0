#include <benchmark/benchmark.h>

#include "kpath/directed.hpp"
#include "kpath/gen.hpp"
#include "kpath/undirected.hpp"

using namespace kpath;

namespace {

Assignment random_point(const BlackBox& bb, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Assignment a = bb.zero_assignment();
  for (auto& group : a.groups)
    for (auto& v : group) v = gf::random_elem(rng);
  return a;
}

// one walk-polynomial evaluation at n = 50; k varies
void BM_pg_eval(benchmark::State& state) {
  gf::set_field(gf::config_for_width(64));
  const Digraph g = random_digraph(50, 0.3, 42);
  const PgEvaluator bb(g, static_cast<int>(state.range(0)));
  const Assignment a = random_point(bb, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bb.eval(a));
  }
}

// one dp evaluation of the legitimate-walk sum; n varies, k = 8
void BM_f_eval(benchmark::State& state) {
  gf::set_field(gf::config_for_width(64));
  const int n = static_cast<int>(state.range(0));
  const Ugraph g = random_ugraph(n, 0.3, 43);
  SplitMix64 rng(11);
  const Partition part = sample_partition(g, 0, rng);
  const auto [r, s] = choose_rs(8);
  const FEvaluator f(g, part, LegitParams{8, r, s});
  const Assignment a = random_point(f, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(a));
  }
}

}  // namespace

BENCHMARK(BM_pg_eval)->Arg(8)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_f_eval)->Arg(10)->Arg(25)->Arg(50);
