#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pdstar/dstar_lite.hpp"
#include "pdstar/prioritization.hpp"

namespace pdstar {

/// One step's proposals. `previous` holds each robot's cell one step back (its
/// own start cell on the first step); the fallback path retreats there.
struct StepPlan {
  std::vector<Cell> proposed;
  PriorityOrder order;
  std::vector<Cell> previous;
};

/// What the resolver had to do this step, by robot index. A robot appears in at
/// most one set: rerouted robots found an alternative successor on a clone;
/// fell_back robots made a safety move without a path guarantee (their previous
/// cell, or failing that any free uncommitted successor) after the clone ran
/// out of paths; forced_stay robots had nowhere legal left and keep their cell
/// for one step.
struct StepEvents {
  std::vector<int> rerouted;
  std::vector<int> fell_back;
  std::vector<int> forced_stay;

  bool empty() const { return rerouted.empty() && fell_back.empty() && forced_stay.empty(); }
};

struct ConflictConfig {
  bool forbid_swaps = false;
};

/// Colliding robot pairs (i < j) among active robots: pairs proposing the same
/// cell, plus head-on swaps when swap_check is set.
std::vector<std::pair<int, int>> detect_collisions(const std::vector<Cell>& proposed,
                                                   const std::vector<Cell>& current,
                                                   const std::vector<std::uint8_t>& active,
                                                   bool swap_check);

/// Walks the priority order and commits one cell per active robot, never two
/// robots to the same cell. A robot whose proposal hits an already committed
/// cell replans on a clone of its planner with the offending transition priced
/// as a virtual obstacle; the check-block-replan loop repeats until the clone
/// proposes a clean cell or proves there is none, in which case the robot
/// retreats to its previous cell, dodges to a free uncommitted neighbor, or
/// stays put, in that order.
/// Clones are dropped at the end of the call; the input planners are never
/// mutated. Arrived robots are skipped entirely since everyone shares the goal.
std::pair<StepPlan, StepEvents> resolve_conflicts(const StepPlan& plan,
                                                  const std::vector<DStarLite>& planners,
                                                  const ConflictConfig& config = {});

}  // namespace pdstar
