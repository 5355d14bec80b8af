#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pdstar/engine.hpp"

namespace pdstar {

struct BenchConfig {
  int grid_size = 20;
  std::vector<double> densities{0.1, 0.2, 0.3, 0.4};
  std::vector<int> robot_counts{5, 10};
  int seeds = 25;               // scenarios per (density, robot_count) cell
  std::uint64_t base_seed = 1;  // per-cell scenario seed is base_seed + seed index
  std::vector<Strategy> strategies = all_strategies();
  int max_steps = 0;
  int repetitions = 3;  // timed executions per record; wall time is their median
  int jobs = 1;         // worker threads across scenario cells
  bool forbid_swaps = false;
  int hillclimb_budget = 0;
};

enum class RecordStatus { kOk, kNoInitialPath, kStepLimit, kGenerationFailed };

std::string record_status_name(RecordStatus s);

struct BenchRecord {
  double density = 0.0;
  int robots = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::kFreedom;
  RecordStatus status = RecordStatus::kOk;
  // Metric fields are meaningful only when status == kOk.
  long long path_length = 0;
  double wall_time_s = 0.0;
  int steps = 0;
  int reroutes = 0;
  int fallbacks = 0;
  int forced_stays = 0;
  std::uint64_t scenario_hash = 0;
};

/// Called once per produced record, under a lock when jobs > 1. `result` is
/// null for failed records.
using RunObserver =
    std::function<void(const BenchRecord&, const Scenario&, const SimulationResult*)>;

/// Runs every strategy on the same generated scenario per (density, robots,
/// seed) cell, so per-scenario comparisons are paired. Failures become records
/// with a non-ok status; the sweep itself never aborts. Output is sorted by
/// (density, robots, seed, strategy) regardless of the number of worker
/// threads, and everything except wall times reproduces exactly across runs.
std::vector<BenchRecord> sweep(const BenchConfig& config, const RunObserver& observer = {});

struct StrategyStats {
  int runs_ok = 0;
  double mean_path = 0.0, q1_path = 0.0, median_path = 0.0, q3_path = 0.0;
  double mean_time = 0.0, q1_time = 0.0, median_time = 0.0, q3_time = 0.0;
};

struct CellSummary {
  double density = 0.0;
  int robots = 0;
  Strategy strategy = Strategy::kFreedom;
  StrategyStats stats;
};

/// Paired comparison of the freedom strategy against one baseline in one sweep
/// cell. improvement_pct = 100 * (mean_baseline - mean_freedom) / mean_baseline
/// over wall times; win_rate counts paired scenarios where freedom was faster.
struct BaselineComparison {
  double density = 0.0;
  int robots = 0;
  Strategy baseline = Strategy::kRandom;
  int pairs = 0;
  double mean_time_baseline = 0.0;
  double mean_time_freedom = 0.0;
  double improvement_pct = 0.0;
  double win_rate = 0.0;
};

struct Summary {
  std::vector<CellSummary> cells;
  std::vector<BaselineComparison> comparisons;
  std::vector<std::string> notes;  // e.g. groups omitted for lack of ok runs
};

/// Pure function of the records; row order does not matter. Quartiles use the
/// nearest-rank convention.
Summary summarize(const std::vector<BenchRecord>& records);

/// Nearest-rank quantile of an unsorted sample: value at rank ceil(p * n).
double quantile_nearest_rank(std::vector<double> values, double p);

/// FNV-1a over the canonical scenario bytes; equal hashes across strategies
/// witness the paired design.
std::uint64_t scenario_hash(const Scenario& scenario);

/// Fixed header:
/// density,robots,seed,strategy,status,path_length,wall_time_s,steps,reroutes,fallbacks,forced_stays,scenario_hash
std::string records_to_csv(const std::vector<BenchRecord>& records);
std::string summary_to_csv(const Summary& summary);
std::string summary_to_table(const Summary& summary);

}  // namespace pdstar
