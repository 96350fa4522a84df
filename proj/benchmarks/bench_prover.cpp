#include <benchmark/benchmark.h>

#include "isolation/constructions.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/prover.hpp"
#include "isolation/verify.hpp"

using namespace isolab;

static void BM_ProverBpP3(benchmark::State& state) {
  const Graph g = build_B_prime_P3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_k2(g).d);
}
BENCHMARK(BM_ProverBpP3)->Arg(16)->Arg(32)->Arg(64);

static void BM_ProverBK3(benchmark::State& state) {
  const Graph g = build_B(static_cast<int>(state.range(0)), {GraphTag::K3});
  for (auto _ : state) benchmark::DoNotOptimize(isolate_k3(g).d);
}
BENCHMARK(BM_ProverBK3)->Arg(16)->Arg(32)->Arg(64);

static void BM_SweepK2(benchmark::State& state) {
  SweepOptions o;
  o.theorem = Theorem::K2;
  o.source = EnumSpec{1, 7, true, BuiltinSource{}, false};
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(o).checked);
}
BENCHMARK(BM_SweepK2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
