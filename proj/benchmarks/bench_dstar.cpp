#include <benchmark/benchmark.h>

#include "pdstar/dstar_lite.hpp"
#include "pdstar/worldgen.hpp"

using namespace pdstar;

namespace {

Scenario scenario_for(int size, double density, std::uint64_t seed) {
  GenConfig cfg;
  cfg.width = cfg.height = size;
  cfg.density = density;
  cfg.robots = 1;
  cfg.seed = seed;
  return generate(cfg);
}

void BM_InitialSearch(benchmark::State& state) {
  const Scenario s = scenario_for(static_cast<int>(state.range(0)), 0.2, 11);
  for (auto _ : state) {
    DStarLite planner(CostMap(s.world), s.starts[0], s.goal);
    planner.compute_shortest_path();
    benchmark::DoNotOptimize(planner.g(s.starts[0]));
  }
}
BENCHMARK(BM_InitialSearch)->Arg(15)->Arg(50)->Arg(100);

// Repairing after one blocked edge near the start, versus planning fresh.
void BM_IncrementalRepair(benchmark::State& state) {
  const Scenario s = scenario_for(static_cast<int>(state.range(0)), 0.2, 11);
  DStarLite planner(CostMap(s.world), s.starts[0], s.goal);
  planner.compute_shortest_path();
  const Cell step = planner.next_step();
  for (auto _ : state) {
    DStarLite copy = planner;
    copy.apply_edge_changes({EdgeChange{s.starts[0], step, kInfiniteCost}}, s.starts[0]);
    benchmark::DoNotOptimize(copy.g(s.starts[0]));
  }
}
BENCHMARK(BM_IncrementalRepair)->Arg(15)->Arg(50)->Arg(100);

void BM_PlannerClone(benchmark::State& state) {
  const Scenario s = scenario_for(static_cast<int>(state.range(0)), 0.2, 11);
  DStarLite planner(CostMap(s.world), s.starts[0], s.goal);
  planner.compute_shortest_path();
  for (auto _ : state) {
    DStarLite copy = planner;
    benchmark::DoNotOptimize(copy.k_m());
  }
}
BENCHMARK(BM_PlannerClone)->Arg(20)->Arg(100);

}  // namespace
