#include <benchmark/benchmark.h>

#include "isolation/enumerate.hpp"
#include "isolation/graph6.hpp"

using namespace isolab;

static void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate(EnumSpec::builtin(n), [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const std::vector<Graph> gs = enumerate_all(EnumSpec::builtin(7));
  for (auto _ : state) {
    for (const Graph& g : gs) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gs.size()));
}
BENCHMARK(BM_Graph6RoundTrip);
