#include <benchmark/benchmark.h>

#include "pdstar/engine.hpp"
#include "pdstar/worldgen.hpp"

using namespace pdstar;

namespace {

Scenario desk_scenario(int robots, std::uint64_t seed) {
  GenConfig cfg;
  cfg.width = cfg.height = 20;
  cfg.density = 0.2;
  cfg.robots = robots;
  cfg.seed = seed;
  return generate(cfg);
}

void run_strategy(benchmark::State& state, Strategy strategy) {
  const Scenario s = desk_scenario(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    const SimulationResult result = run(s, strategy);
    benchmark::DoNotOptimize(result.combined_path_length);
  }
}

void BM_RunFreedom(benchmark::State& state) { run_strategy(state, Strategy::kFreedom); }
void BM_RunFarthest(benchmark::State& state) { run_strategy(state, Strategy::kFarthest); }
void BM_RunRandom(benchmark::State& state) { run_strategy(state, Strategy::kRandom); }
BENCHMARK(BM_RunFreedom)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK(BM_RunFarthest)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK(BM_RunRandom)->Arg(5)->Arg(10)->Arg(20);

void BM_Worldgen(benchmark::State& state) {
  GenConfig cfg;
  cfg.width = cfg.height = 20;
  cfg.density = 0.4;
  cfg.robots = 10;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(generate(cfg).starts.size());
  }
}
BENCHMARK(BM_Worldgen);

}  // namespace

BENCHMARK_MAIN();
