#include <benchmark/benchmark.h>

#include "kpath/gf2.hpp"
#include "kpath/rng.hpp"

using namespace kpath;

namespace {

void BM_mul_hw(benchmark::State& state) {
  gf::set_field(gf::config_for_width(static_cast<unsigned>(state.range(0))));
  if (!gf::hw_mul_available()) {
    state.SkipWithError("no carryless-multiply hardware");
    return;
  }
  SplitMix64 rng(1);
  gf::Elem a = gf::random_elem(rng), b = gf::random_elem(rng);
  for (auto _ : state) {
    a = gf::mul_hw(a, b);
    benchmark::DoNotOptimize(a);
  }
}

void BM_mul_portable(benchmark::State& state) {
  gf::set_field(gf::config_for_width(static_cast<unsigned>(state.range(0))));
  SplitMix64 rng(1);
  gf::Elem a = gf::random_elem(rng), b = gf::random_elem(rng);
  for (auto _ : state) {
    a = gf::mul_portable(a, b);
    benchmark::DoNotOptimize(a);
  }
}

void BM_determinant(benchmark::State& state) {
  gf::set_field(gf::config_for_width(64));
  SplitMix64 rng(2);
  const int n = static_cast<int>(state.range(0));
  gf::FieldMatrix m(n);
  for (auto& e : m.entries) e = gf::random_elem(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf::determinant(m));
  }
}

}  // namespace

BENCHMARK(BM_mul_hw)->Arg(8)->Arg(64);
BENCHMARK(BM_mul_portable)->Arg(8)->Arg(64);
BENCHMARK(BM_determinant)->Arg(4)->Arg(16);
