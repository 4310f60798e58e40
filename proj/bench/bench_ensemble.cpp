// Serial reference vs OpenMP kernels for the engine ensemble.

#include <benchmark/benchmark.h>

#include "landauer/szilard.hpp"

namespace {

landauer::EngineConfig config(std::int64_t cycles) {
  landauer::EngineConfig c;
  c.epsilon = 0.1;
  c.cycles = static_cast<std::uint64_t>(cycles);
  c.seed = 42;
  return c;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto c = config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(landauer::simulate_cycles_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SimulateOpenMP(benchmark::State& state) {
  const auto c = config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(landauer::simulate_cycles(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AggregateSerial(benchmark::State& state) {
  const auto c = config(state.range(0));
  const auto records = landauer::simulate_cycles(c);
  for (auto _ : state) benchmark::DoNotOptimize(landauer::aggregate_serial(records, c.context()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AggregateOpenMP(benchmark::State& state) {
  const auto c = config(state.range(0));
  const auto records = landauer::simulate_cycles(c);
  for (auto _ : state) benchmark::DoNotOptimize(landauer::aggregate(records, c.context()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(BM_SimulateOpenMP)->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(BM_AggregateSerial)->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(BM_AggregateOpenMP)->RangeMultiplier(10)->Range(10000, 1000000);

BENCHMARK_MAIN();
