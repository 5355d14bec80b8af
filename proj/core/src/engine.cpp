#include "pdstar/engine.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace pdstar {

namespace {

using Clock = std::chrono::steady_clock;

int default_max_steps(const GridWorld& grid) {
  return 10 * (grid.width() + grid.height());
}

struct OrderPolicy {
  bool dynamic = true;
  PriorityOrder base;  // used when !dynamic
};

SimulationResult simulate(const Scenario& scenario, const RunConfig& config,
                          const OrderPolicy& policy) {
  const auto t_begin = Clock::now();
  const GridWorld& grid = *scenario.world;
  const int n = static_cast<int>(scenario.starts.size());
  const int max_steps = config.max_steps > 0 ? config.max_steps : default_max_steps(grid);

  std::vector<DStarLite> planners;
  planners.reserve(n);
  for (int i = 0; i < n; ++i) {
    planners.emplace_back(CostMap(scenario.world), scenario.starts[i], scenario.goal);
    planners.back().compute_shortest_path();
    if (planners.back().g(scenario.starts[i]) == kInfiniteCost) {
      throw NoInitialPathError(i);
    }
  }

  std::vector<const CostMap*> costmaps;
  costmaps.reserve(n);
  for (const DStarLite& p : planners) costmaps.push_back(&p.costmap());

  SimulationResult result;
  result.trajectories.resize(n);
  result.arrival_steps.assign(n, -1);
  result.initial_costs.reserve(n);
  for (int i = 0; i < n; ++i) {
    result.trajectories[i].push_back(scenario.starts[i]);
    result.initial_costs.push_back(planners[i].g(scenario.starts[i]));
  }

  std::vector<Cell> positions = scenario.starts;
  std::vector<Cell> previous = scenario.starts;
  std::vector<std::uint8_t> arrived(n, 0);
  int remaining = n;

  const ConflictConfig conflict_config{config.forbid_swaps};
  std::vector<Cell> proposed(n);

  while (remaining > 0) {
    if (result.steps_run >= max_steps) {
      result.status = RunStatus::kStepLimit;
      break;
    }

    for (int i = 0; i < n; ++i) {
      proposed[i] = arrived[i] ? scenario.goal : planners[i].next_step();
    }
    PriorityOrder order = policy.dynamic
                              ? order_freedom_index(costmaps, positions, arrived)
                              : partition_arrived(policy.base, arrived);

    auto [resolved, events] =
        resolve_conflicts(StepPlan{proposed, std::move(order), previous}, planners,
                          conflict_config);

    for (int i = 0; i < n; ++i) {
      if (arrived[i]) continue;
      const Cell to = resolved.proposed[i];
      previous[i] = positions[i];
      if (!(to == positions[i])) ++result.combined_path_length;
      positions[i] = to;
      result.trajectories[i].push_back(to);
      if (to == scenario.goal) {
        arrived[i] = 1;
        result.arrival_steps[i] = result.steps_run + 1;
        --remaining;
      } else {
        planners[i].apply_edge_changes({}, to);
      }
    }

    result.step_events.push_back(std::move(events));
    ++result.steps_run;
  }

  result.wall_time_seconds =
      std::chrono::duration<double>(Clock::now() - t_begin).count();
  return result;
}

SimulationResult run_hill_climb(const Scenario& scenario, const RunConfig& config) {
  const auto t_begin = Clock::now();
  const int n = static_cast<int>(scenario.starts.size());
  const int budget = config.hillclimb_budget > 0 ? config.hillclimb_budget : 5 * n;

  // Cache the result of the best order seen so far; the acceptance rule below
  // mirrors the strict-improvement rule inside order_hill_climb, so the cached
  // result always belongs to the returned order.
  std::optional<SimulationResult> best_result;
  double best_cost = kInfiniteCost;
  bool first_eval = true;

  const auto evaluate = [&](const PriorityOrder& order) -> double {
    SimulationResult r = simulate(scenario, config, OrderPolicy{false, order});
    const double cost =
        r.status == RunStatus::kOk ? static_cast<double>(r.combined_path_length)
                                   : kInfiniteCost;
    if (first_eval || cost < best_cost) {
      best_cost = cost;
      best_result = std::move(r);
      first_eval = false;
    }
    return cost;
  };

  order_hill_climb(n, evaluate, budget, scenario.seed);
  if (!best_result) {
    // n < 2 short-circuits the search without evaluating; run the single order.
    best_result = simulate(scenario, config, OrderPolicy{false, order_random(n, scenario.seed)});
  }
  best_result->wall_time_seconds =
      std::chrono::duration<double>(Clock::now() - t_begin).count();
  return *best_result;
}

}  // namespace

void validate_scenario(const Scenario& scenario) {
  if (!scenario.world) throw std::invalid_argument("scenario: null world");
  const GridWorld& grid = *scenario.world;
  if (!grid.in_bounds(scenario.goal) || grid.is_obstacle(scenario.goal)) {
    throw std::invalid_argument("scenario: goal must be a free in-bounds cell");
  }
  std::unordered_set<std::size_t> seen;
  for (std::size_t i = 0; i < scenario.starts.size(); ++i) {
    const Cell s = scenario.starts[i];
    if (!grid.in_bounds(s)) throw std::invalid_argument("scenario: start out of bounds");
    if (grid.is_obstacle(s)) throw std::invalid_argument("scenario: start on an obstacle");
    if (s == scenario.goal) throw std::invalid_argument("scenario: start on the goal");
    if (!seen.insert(grid.index(s)).second) {
      throw std::invalid_argument("scenario: duplicate start");
    }
  }
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "freedom") return Strategy::kFreedom;
  if (name == "farthest") return Strategy::kFarthest;
  if (name == "random") return Strategy::kRandom;
  if (name == "hillclimb") return Strategy::kHillClimb;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kFreedom: return "freedom";
    case Strategy::kFarthest: return "farthest";
    case Strategy::kRandom: return "random";
    case Strategy::kHillClimb: return "hillclimb";
  }
  return "unknown";
}

std::vector<Strategy> all_strategies() {
  return {Strategy::kFreedom, Strategy::kFarthest, Strategy::kRandom, Strategy::kHillClimb};
}

int SimulationResult::total_reroutes() const {
  int total = 0;
  for (const StepEvents& e : step_events) total += static_cast<int>(e.rerouted.size());
  return total;
}

int SimulationResult::total_fallbacks() const {
  int total = 0;
  for (const StepEvents& e : step_events) total += static_cast<int>(e.fell_back.size());
  return total;
}

int SimulationResult::total_forced_stays() const {
  int total = 0;
  for (const StepEvents& e : step_events) total += static_cast<int>(e.forced_stay.size());
  return total;
}

SimulationResult run(const Scenario& scenario, Strategy strategy, const RunConfig& config) {
  validate_scenario(scenario);
  const int n = static_cast<int>(scenario.starts.size());

  switch (strategy) {
    case Strategy::kFreedom:
      return simulate(scenario, config, OrderPolicy{true, {}});
    case Strategy::kRandom:
      return simulate(scenario, config,
                      OrderPolicy{false, order_random(n, scenario.seed)});
    case Strategy::kFarthest: {
      // The initial costs come from throwaway planners so that the timed run
      // below stays comparable with the other static strategies.
      std::vector<double> costs;
      costs.reserve(n);
      for (int i = 0; i < n; ++i) {
        DStarLite planner(CostMap(scenario.world), scenario.starts[i], scenario.goal);
        planner.compute_shortest_path();
        if (planner.g(scenario.starts[i]) == kInfiniteCost) throw NoInitialPathError(i);
        costs.push_back(planner.g(scenario.starts[i]));
      }
      return simulate(scenario, config, OrderPolicy{false, order_farthest_first(costs)});
    }
    case Strategy::kHillClimb:
      return run_hill_climb(scenario, config);
  }
  throw std::invalid_argument("run: unknown strategy");
}

SimulationResult run_with_order(const Scenario& scenario, const PriorityOrder& order,
                                const RunConfig& config) {
  validate_scenario(scenario);
  if (order.entries.size() != scenario.starts.size()) {
    throw std::invalid_argument("run_with_order: order size mismatch");
  }
  return simulate(scenario, config, OrderPolicy{false, order});
}

std::vector<Violation> validate(const SimulationResult& result, const Scenario& scenario,
                                bool check_swaps) {
  std::vector<Violation> violations;
  const GridWorld& grid = *scenario.world;
  const int n = static_cast<int>(result.trajectories.size());

  const auto stay_recorded = [&](int step, int robot) {
    if (step < 0 || step >= static_cast<int>(result.step_events.size())) return false;
    const auto& stays = result.step_events[step].forced_stay;
    return std::find(stays.begin(), stays.end(), robot) != stays.end();
  };

  for (int i = 0; i < n; ++i) {
    const auto& traj = result.trajectories[i];
    if (traj.empty() || !(traj.front() == scenario.starts[i])) {
      violations.push_back({Violation::Kind::kBadEndpoint, 0, i, -1,
                            "trajectory does not begin at the robot's start"});
      continue;
    }
    if (result.status == RunStatus::kOk && !(traj.back() == scenario.goal)) {
      violations.push_back({Violation::Kind::kBadEndpoint,
                            static_cast<int>(traj.size()) - 1, i, -1,
                            "trajectory of a completed run does not end at the goal"});
    }
    for (std::size_t t = 0; t + 1 < traj.size(); ++t) {
      const Cell a = traj[t];
      const Cell b = traj[t + 1];
      if (!grid.in_bounds(b) || grid.is_obstacle(b)) {
        violations.push_back({Violation::Kind::kIllegalMove, static_cast<int>(t), i, -1,
                              "move into a wall or out of bounds"});
        continue;
      }
      if (a == b) {
        if (!stay_recorded(static_cast<int>(t), i)) {
          violations.push_back({Violation::Kind::kUnexplainedStay, static_cast<int>(t), i,
                                -1, "stay without a recorded forced stay"});
        }
      } else if (manhattan(a, b) != 1) {
        violations.push_back({Violation::Kind::kIllegalMove, static_cast<int>(t), i, -1,
                              "step between non-adjacent cells"});
      }
    }
  }

  // Every recorded forced stay must correspond to an actual stay.
  for (std::size_t t = 0; t < result.step_events.size(); ++t) {
    for (const int i : result.step_events[t].forced_stay) {
      const auto& traj = result.trajectories[i];
      if (t + 1 >= traj.size() || !(traj[t] == traj[t + 1])) {
        violations.push_back({Violation::Kind::kInconsistentEvent, static_cast<int>(t), i,
                              -1, "forced stay recorded but the robot moved"});
      }
    }
  }

  std::size_t horizon = 0;
  for (const auto& traj : result.trajectories) horizon = std::max(horizon, traj.size());
  std::unordered_map<std::size_t, int> occupied;
  for (std::size_t t = 0; t < horizon; ++t) {
    occupied.clear();
    for (int i = 0; i < n; ++i) {
      const auto& traj = result.trajectories[i];
      if (t >= traj.size()) continue;  // departed through the goal
      const auto [it, inserted] = occupied.emplace(grid.index(traj[t]), i);
      if (!inserted) {
        violations.push_back({Violation::Kind::kVertexCollision, static_cast<int>(t),
                              it->second, i, "two robots share a cell"});
      }
    }
  }

  if (check_swaps) {
    for (std::size_t t = 0; t + 1 < horizon; ++t) {
      for (int i = 0; i < n; ++i) {
        const auto& ti = result.trajectories[i];
        if (t + 1 >= ti.size()) continue;
        for (int j = i + 1; j < n; ++j) {
          const auto& tj = result.trajectories[j];
          if (t + 1 >= tj.size()) continue;
          if (ti[t + 1] == tj[t] && tj[t + 1] == ti[t] && !(ti[t] == ti[t + 1])) {
            violations.push_back({Violation::Kind::kSwap, static_cast<int>(t), i, j,
                                  "robots exchanged cells in one step"});
          }
        }
      }
    }
  }

  return violations;
}

}  // namespace pdstar
