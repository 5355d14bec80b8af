#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdstar/conflict.hpp"
#include "pdstar/dstar_lite.hpp"
#include "pdstar/grid.hpp"
#include "pdstar/prioritization.hpp"

namespace pdstar {

/// A planning problem instance: a shared world, one start per robot and the
/// common goal. The seed drives every random choice made while solving it.
struct Scenario {
  std::shared_ptr<const GridWorld> world;
  std::vector<Cell> starts;
  Cell goal;
  std::uint64_t seed = 0;
};

/// Structural checks: bounds, distinct starts, nothing parked on an obstacle or
/// on the goal. Connectivity is not checked here; an unreachable goal surfaces
/// as NoInitialPathError when the run starts.
void validate_scenario(const Scenario& scenario);

enum class Strategy { kFreedom, kFarthest, kRandom, kHillClimb };

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);
std::vector<Strategy> all_strategies();

enum class RunStatus { kOk, kStepLimit };

struct RunConfig {
  int max_steps = 0;        // 0 selects 10 * (width + height)
  bool forbid_swaps = false;
  int hillclimb_budget = 0; // 0 selects 5 * robot count
};

struct NoInitialPathError : std::runtime_error {
  explicit NoInitialPathError(int robot_index)
      : std::runtime_error("robot " + std::to_string(robot_index) +
                           " has no path to the goal"),
        robot(robot_index) {}
  int robot;
};

struct SimulationResult {
  RunStatus status = RunStatus::kOk;
  /// One position sequence per robot, truncated at arrival.
  std::vector<std::vector<Cell>> trajectories;
  /// Arrival step per robot; -1 when the run hit the step limit first.
  std::vector<int> arrival_steps;
  /// Total moves across robots. A forced stay adds a step but no move.
  long long combined_path_length = 0;
  std::vector<StepEvents> step_events;  // one entry per executed step
  std::vector<double> initial_costs;    // g(start) per robot at step 0
  double wall_time_seconds = 0.0;
  int steps_run = 0;

  int total_reroutes() const;
  int total_fallbacks() const;
  int total_forced_stays() const;
};

/// Runs the full simulation: per-robot planners are initialized once, then each
/// step proposes every robot's next cell, orders the robots (dynamically by
/// freedom index or by the strategy's static order), resolves conflicts and
/// moves everyone simultaneously, until all robots have reached the goal or the
/// step limit trips. Identical inputs give identical results apart from the
/// wall time.
SimulationResult run(const Scenario& scenario, Strategy strategy, const RunConfig& config = {});

/// Same stepping loop under an explicit static priority order. This is the
/// evaluator the hill-climb search drives; it is also handy on its own.
SimulationResult run_with_order(const Scenario& scenario, const PriorityOrder& order,
                                const RunConfig& config = {});

struct Violation {
  enum class Kind {
    kVertexCollision,
    kIllegalMove,
    kUnexplainedStay,
    kInconsistentEvent,
    kBadEndpoint,
    kSwap,
  };
  Kind kind;
  int step = 0;
  int robot_a = -1;
  int robot_b = -1;
  std::string message;
};

/// Audits a result straight from its trajectories, with no planner state:
/// endpoint correctness, move legality (4-neighbor steps, stays only where a
/// forced stay was recorded), pairwise distinct positions among robots still in
/// the field, and optionally swap conflicts. An empty list means the result is
/// consistent.
std::vector<Violation> validate(const SimulationResult& result, const Scenario& scenario,
                                bool check_swaps = false);

}  // namespace pdstar
