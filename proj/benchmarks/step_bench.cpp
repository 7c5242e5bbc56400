#include <benchmark/benchmark.h>

#include "mahh/harness.hpp"

namespace {

using namespace mahh;

void BM_Step(benchmark::State& state, const char* algo) {
  const int n = static_cast<int>(state.range(0));
  const auto f = FitnessFunction::jump(n, 3);
  const AlgorithmConfig cfg = baseline_config(algo, n, 0.5 / n);
  Rng rng(1);
  SearchState s = SearchState::start(f, BitString::uniform(static_cast<std::size_t>(n), rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(s, cfg, f, rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_Step, onebit, "mahh-onebit")->Arg(20)->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_Step, global, "mahh-global")->Arg(20)->Arg(100)->Arg(1000);

void BM_Batch(benchmark::State& state) {
  const auto f = FitnessFunction::jump(10, 2);
  const AlgorithmConfig cfg = baseline_config("mahh-onebit", 10, 0.2);
  BatchOptions options;
  options.trials = 100;
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_batch(cfg, f, options));
    ++options.base_seed;
  }
}
BENCHMARK(BM_Batch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Drift(benchmark::State& state) {
  const auto f = FitnessFunction::jump(20, 4);
  const AlgorithmConfig cfg = baseline_config("mahh-global", 20, 0.02);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_drift(cfg, f, 10, 10000, ++seed));
  }
}
BENCHMARK(BM_Drift)->Unit(benchmark::kMillisecond);

}  // namespace
