// Serial reference vs OpenMP layered kernel for the subset DP table, plus the
// other solvers on the same instances for scale.
#include <benchmark/benchmark.h>

#include "cactuskit/edge_deletion.hpp"
#include "cactuskit/generators.hpp"
#include "cactuskit/subset_dp.hpp"

namespace {

using namespace cactus;

Graph instance(int n) { return gen_instance(GenKind::Random, n, n, 1000 + static_cast<std::uint64_t>(n)); }

void run_table(benchmark::State& state, DpKernel kernel) {
  const Graph g = instance(static_cast<int>(state.range(0)));
  DpOptions opts;
  opts.kernel = kernel;
  opts.threads = static_cast<int>(state.range(1));
  DpStats stats;
  for (auto _ : state) {
    auto table = build_subset_table(g, opts, &stats);
    benchmark::DoNotOptimize(table.value(g.all_vertices()));
  }
  state.counters["subsets"] = static_cast<double>(stats.subsets_evaluated);
  state.counters["splits"] = static_cast<double>(stats.splits_examined);
}

void BM_TableSerial(benchmark::State& state) { run_table(state, DpKernel::Serial); }
void BM_TableParallel(benchmark::State& state) { run_table(state, DpKernel::Parallel); }
void BM_TableTopDown(benchmark::State& state) { run_table(state, DpKernel::TopDown); }

void BM_TreeEnum(benchmark::State& state) {
  const Graph g = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edc_tree_enum(g).deleted_count);
}

}  // namespace

BENCHMARK(BM_TableSerial)->ArgsProduct({{10, 12, 14, 16}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->ArgsProduct({{10, 12, 14, 16}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableTopDown)->ArgsProduct({{10, 12, 14}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeEnum)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
