// Serial reference versus OpenMP kernels for the subset scans behind move
// generation. Arguments: pool size of the mover.

#include <benchmark/benchmark.h>

#include <memory>

#include "stratarg/corpus.hpp"
#include "stratarg/game.hpp"

namespace {

using namespace stratarg;

/// Opponent to move with `pool` unplayed arguments against one revealed
/// proponent argument.
GameState bench_state(std::size_t pool) {
  GeneratorParams params;
  params.n_common = 2;
  params.n_p = 2;
  params.n_o = pool;
  params.attack_probability = 0.2;
  params.seed = 2024;
  auto split = std::make_shared<const SplitFramework>(random_split(params));
  const ArgumentationFramework& af = split->framework();
  return GameState(split, split->common() | af.set_of({"p1"}), Side::opponent);
}

void effect_table_bench(benchmark::State& state, Execution exec) {
  GameState st = bench_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    EffectTable t = effect_table(st, exec);
    benchmark::DoNotOptimize(t.effective.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void minimal_masks_bench(benchmark::State& state, Execution exec) {
  GameState st = bench_state(static_cast<std::size_t>(state.range(0)));
  EffectTable t = effect_table(st, Execution::serial);
  for (auto _ : state) {
    auto masks = minimal_masks(t, exec);
    benchmark::DoNotOptimize(masks.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_EffectTableSerial(benchmark::State& s) { effect_table_bench(s, Execution::serial); }
void BM_EffectTableParallel(benchmark::State& s) { effect_table_bench(s, Execution::parallel); }
void BM_MinimalMasksSerial(benchmark::State& s) { minimal_masks_bench(s, Execution::serial); }
void BM_MinimalMasksParallel(benchmark::State& s) { minimal_masks_bench(s, Execution::parallel); }

BENCHMARK(BM_EffectTableSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EffectTableParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MinimalMasksSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalMasksParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
