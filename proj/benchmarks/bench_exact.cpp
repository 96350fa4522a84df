#include <benchmark/benchmark.h>

#include "isolation/constructions.hpp"
#include "isolation/family.hpp"

using namespace isolab;

static void BM_ExactBK3(benchmark::State& state) {
  const Graph g = build_B(static_cast<int>(state.range(0)), {GraphTag::K3});
  const FamilySpec fam = FamilySpec::edges_at_least(3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_iota(g, fam).value);
}
BENCHMARK(BM_ExactBK3)->DenseRange(8, 16, 4);

static void BM_ExactBpP3(benchmark::State& state) {
  const Graph g = build_B_prime_P3(static_cast<int>(state.range(0)));
  const FamilySpec fam = FamilySpec::edges_at_least(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_iota(g, fam).value);
}
BENCHMARK(BM_ExactBpP3)->DenseRange(8, 16, 4);

static void BM_ExactCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  const FamilySpec fam = FamilySpec::edges_at_least(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_iota(g, fam).value);
}
BENCHMARK(BM_ExactCycle)->Arg(14)->Arg(21)->Arg(28);

static void BM_BudgetedBpC6(benchmark::State& state) {
  const Graph g = build_B_prime_7r_C6(3);
  const FamilySpec fam = FamilySpec::edges_at_least(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_iota_within(g, fam, 6));
}
BENCHMARK(BM_BudgetedBpC6)->Unit(benchmark::kMillisecond);
