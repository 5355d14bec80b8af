#include "pdstar/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "pdstar/worldgen.hpp"

namespace pdstar {

namespace {

std::string format_double(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string format_density(double d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct SweepCell {
  double density;
  int robots;
  std::uint64_t seed;
};

}  // namespace

std::string record_status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kNoInitialPath: return "no_initial_path";
    case RecordStatus::kStepLimit: return "step_limit";
    case RecordStatus::kGenerationFailed: return "generation_failed";
  }
  return "unknown";
}

std::uint64_t scenario_hash(const Scenario& scenario) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  const auto mix = [&h](std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (value >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  const GridWorld& grid = *scenario.world;
  mix(static_cast<std::uint64_t>(grid.width()));
  mix(static_cast<std::uint64_t>(grid.height()));
  mix(static_cast<std::uint64_t>(scenario.goal.x));
  mix(static_cast<std::uint64_t>(scenario.goal.y));
  mix(scenario.seed);
  for (const Cell c : grid.obstacles()) {
    mix(static_cast<std::uint64_t>(grid.index(c)));
  }
  for (const Cell s : scenario.starts) {
    mix(static_cast<std::uint64_t>(grid.index(s)));
  }
  return h;
}

std::vector<BenchRecord> sweep(const BenchConfig& config, const RunObserver& observer) {
  if (config.seeds < 1 || config.densities.empty() || config.robot_counts.empty()) {
    throw std::invalid_argument("sweep: empty sweep axis");
  }
  std::vector<SweepCell> cells;
  for (const double density : config.densities) {
    for (const int robots : config.robot_counts) {
      for (int s = 0; s < config.seeds; ++s) {
        cells.push_back(SweepCell{density, robots, config.base_seed + s});
      }
    }
  }

  const std::size_t strategies = config.strategies.size();
  std::vector<BenchRecord> records(cells.size() * strategies);
  std::mutex observer_mutex;

  const auto run_cell = [&](std::size_t cell_index) {
    const SweepCell& cell = cells[cell_index];
    BenchRecord* slot = records.data() + cell_index * strategies;

    GenConfig gen;
    gen.width = gen.height = config.grid_size;
    gen.density = cell.density;
    gen.robots = cell.robots;
    gen.seed = cell.seed;

    Scenario scenario;
    bool generated = false;
    try {
      scenario = generate(gen);
      generated = true;
    } catch (const std::exception&) {
      generated = false;
    }

    const RunConfig run_config{config.max_steps, config.forbid_swaps,
                               config.hillclimb_budget};
    for (std::size_t k = 0; k < strategies; ++k) {
      BenchRecord& record = slot[k];
      record.density = cell.density;
      record.robots = cell.robots;
      record.seed = cell.seed;
      record.strategy = config.strategies[k];
      if (!generated) {
        record.status = RecordStatus::kGenerationFailed;
        if (observer) {
          std::lock_guard<std::mutex> lock(observer_mutex);
          observer(record, scenario, nullptr);
        }
        continue;
      }
      record.scenario_hash = scenario_hash(scenario);
      try {
        const int reps = std::max(1, config.repetitions);
        std::vector<double> times;
        times.reserve(reps);
        SimulationResult result;
        for (int rep = 0; rep < reps; ++rep) {
          result = run(scenario, config.strategies[k], run_config);
          times.push_back(result.wall_time_seconds);
        }
        record.status = result.status == RunStatus::kOk ? RecordStatus::kOk
                                                        : RecordStatus::kStepLimit;
        record.path_length = result.combined_path_length;
        record.wall_time_s = median_of(times);
        record.steps = result.steps_run;
        record.reroutes = result.total_reroutes();
        record.fallbacks = result.total_fallbacks();
        record.forced_stays = result.total_forced_stays();
        if (observer) {
          std::lock_guard<std::mutex> lock(observer_mutex);
          observer(record, scenario, &result);
        }
      } catch (const NoInitialPathError&) {
        record.status = RecordStatus::kNoInitialPath;
        if (observer) {
          std::lock_guard<std::mutex> lock(observer_mutex);
          observer(record, scenario, nullptr);
        }
      }
    }
  };

  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) break;
          run_cell(i);
        }
      });
    }
    for (std::thread& t : workers) t.join();
  }

  // Slot layout already orders by (density, robots, seed, strategy).
  return records;
}

double quantile_nearest_rank(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  std::size_t rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
  if (rank < 1) rank = 1;
  if (rank > n) rank = n;
  return values[rank - 1];
}

Summary summarize(const std::vector<BenchRecord>& records) {
  Summary summary;

  std::map<std::pair<double, int>, std::map<Strategy, std::vector<const BenchRecord*>>>
      groups;
  for (const BenchRecord& r : records) {
    groups[{r.density, r.robots}][r.strategy].push_back(&r);
  }

  for (const auto& [cell, by_strategy] : groups) {
    for (const auto& [strategy, rows] : by_strategy) {
      std::vector<double> paths, times;
      for (const BenchRecord* r : rows) {
        if (r->status != RecordStatus::kOk) continue;
        paths.push_back(static_cast<double>(r->path_length));
        times.push_back(r->wall_time_s);
      }
      if (paths.empty()) {
        summary.notes.push_back("group density=" + format_density(cell.first) +
                                " robots=" + std::to_string(cell.second) + " strategy=" +
                                strategy_name(strategy) + " omitted: no ok runs");
        continue;
      }
      CellSummary cs;
      cs.density = cell.first;
      cs.robots = cell.second;
      cs.strategy = strategy;
      cs.stats.runs_ok = static_cast<int>(paths.size());
      cs.stats.mean_path = mean_of(paths);
      cs.stats.q1_path = quantile_nearest_rank(paths, 0.25);
      cs.stats.median_path = quantile_nearest_rank(paths, 0.5);
      cs.stats.q3_path = quantile_nearest_rank(paths, 0.75);
      cs.stats.mean_time = mean_of(times);
      cs.stats.q1_time = quantile_nearest_rank(times, 0.25);
      cs.stats.median_time = quantile_nearest_rank(times, 0.5);
      cs.stats.q3_time = quantile_nearest_rank(times, 0.75);
      summary.cells.push_back(cs);
    }

    // Paired freedom-vs-baseline comparison within the cell.
    const auto freedom_it = by_strategy.find(Strategy::kFreedom);
    if (freedom_it == by_strategy.end()) continue;
    std::map<std::uint64_t, const BenchRecord*> freedom_by_seed;
    std::vector<double> freedom_times;
    for (const BenchRecord* r : freedom_it->second) {
      if (r->status != RecordStatus::kOk) continue;
      freedom_by_seed[r->seed] = r;
      freedom_times.push_back(r->wall_time_s);
    }
    for (const auto& [strategy, rows] : by_strategy) {
      if (strategy == Strategy::kFreedom) continue;
      BaselineComparison cmp;
      cmp.density = cell.first;
      cmp.robots = cell.second;
      cmp.baseline = strategy;
      std::vector<double> baseline_times;
      int wins = 0;
      for (const BenchRecord* r : rows) {
        if (r->status != RecordStatus::kOk) continue;
        baseline_times.push_back(r->wall_time_s);
        const auto paired = freedom_by_seed.find(r->seed);
        if (paired == freedom_by_seed.end()) continue;
        ++cmp.pairs;
        if (paired->second->wall_time_s < r->wall_time_s) ++wins;
      }
      if (baseline_times.empty() || freedom_times.empty()) continue;
      cmp.mean_time_baseline = mean_of(baseline_times);
      cmp.mean_time_freedom = mean_of(freedom_times);
      cmp.improvement_pct = cmp.mean_time_baseline > 0.0
                                ? 100.0 * (cmp.mean_time_baseline - cmp.mean_time_freedom) /
                                      cmp.mean_time_baseline
                                : 0.0;
      cmp.win_rate = cmp.pairs > 0 ? static_cast<double>(wins) / cmp.pairs : 0.0;
      summary.comparisons.push_back(cmp);
    }
  }
  return summary;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "density,robots,seed,strategy,status,path_length,wall_time_s,steps,"
         "reroutes,fallbacks,forced_stays,scenario_hash\n";
  for (const BenchRecord& r : records) {
    out << format_density(r.density) << ',' << r.robots << ',' << r.seed << ','
        << strategy_name(r.strategy) << ',' << record_status_name(r.status) << ',';
    if (r.status == RecordStatus::kOk) {
      out << r.path_length << ',' << format_double(r.wall_time_s, 9) << ',' << r.steps
          << ',' << r.reroutes << ',' << r.fallbacks << ',' << r.forced_stays << ',';
    } else {
      out << ",,,,,,";
    }
    if (r.status != RecordStatus::kGenerationFailed) {
      char hex[32];
      std::snprintf(hex, sizeof(hex), "%016llx",
                    static_cast<unsigned long long>(r.scenario_hash));
      out << hex;
    }
    out << '\n';
  }
  return out.str();
}

std::string summary_to_csv(const Summary& summary) {
  std::ostringstream out;
  out << "density,robots,strategy,runs_ok,mean_path_length,q1_path_length,"
         "median_path_length,q3_path_length,mean_wall_time_s,q1_wall_time_s,"
         "median_wall_time_s,q3_wall_time_s\n";
  for (const CellSummary& c : summary.cells) {
    const StrategyStats& s = c.stats;
    out << format_density(c.density) << ',' << c.robots << ',' << strategy_name(c.strategy)
        << ',' << s.runs_ok << ',' << format_double(s.mean_path) << ','
        << format_double(s.q1_path) << ',' << format_double(s.median_path) << ','
        << format_double(s.q3_path) << ',' << format_double(s.mean_time, 9) << ','
        << format_double(s.q1_time, 9) << ',' << format_double(s.median_time, 9) << ','
        << format_double(s.q3_time, 9) << '\n';
  }
  return out.str();
}

std::string summary_to_table(const Summary& summary) {
  std::ostringstream out;
  char line[256];
  out << "density robots strategy   ok   mean_path  mean_time_s  median_time_s\n";
  for (const CellSummary& c : summary.cells) {
    std::snprintf(line, sizeof(line), "%7s %6d %-9s %4d %11.2f %12.6f %14.6f\n",
                  format_density(c.density).c_str(), c.robots,
                  strategy_name(c.strategy).c_str(), c.stats.runs_ok, c.stats.mean_path,
                  c.stats.mean_time, c.stats.median_time);
    out << line;
  }
  if (!summary.comparisons.empty()) {
    out << "\nfreedom vs baseline (paired, wall time)\n";
    out << "density robots baseline   pairs  improvement%  win_rate\n";
    for (const BaselineComparison& c : summary.comparisons) {
      std::snprintf(line, sizeof(line), "%7s %6d %-9s %6d %12.2f %9.3f\n",
                    format_density(c.density).c_str(), c.robots,
                    strategy_name(c.baseline).c_str(), c.pairs, c.improvement_pct,
                    c.win_rate);
      out << line;
    }
  }
  for (const std::string& note : summary.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace pdstar
