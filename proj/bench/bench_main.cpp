#include <benchmark/benchmark.h>

#include <cstdint>

#include "scatter/generator.hpp"
#include "scatter/oracle.hpp"
#include "scatter/vulnerability.hpp"

namespace {

using namespace scatter;

// Smallest-seed generated graph with exactly n vertices.
Graph graph_with_n(std::int32_t n) {
  for (std::uint64_t seed = 1;; ++seed) {
    GenParams p;
    p.seed = seed;
    p.block_count = n / 3;
    p.max_block_size = 4;
    p.max_twins = 1;
    Graph g = generate_strictly_chordal(p);
    if (g.n() == n && !g.is_complete()) return g;
  }
}

void BM_OracleSerial(benchmark::State& state) {
  const Graph g = graph_with_n(static_cast<std::int32_t>(state.range(0)));
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (auto _ : state) benchmark::DoNotOptimize(scan_subsets_serial(g, 0, total));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * total));
}

void BM_OracleParallel(benchmark::State& state) {
  const Graph g = graph_with_n(static_cast<std::int32_t>(state.range(0)));
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (auto _ : state) benchmark::DoNotOptimize(scan_subsets_parallel(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * total));
}

void BM_Analyze(benchmark::State& state) {
  GenParams p;
  p.seed = 2024;
  p.max_twins = 2;
  p.target_n = static_cast<std::size_t>(state.range(0));
  const Graph g = generate_strictly_chordal(p);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (g.n() + g.m())));
  state.counters["n"] = g.n();
  state.counters["m"] = static_cast<double>(g.m());
}

}  // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Analyze)->RangeMultiplier(2)->Range(25000, 400000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
