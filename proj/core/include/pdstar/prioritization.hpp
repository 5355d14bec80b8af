#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pdstar/grid.hpp"

namespace pdstar {

struct PriorityEntry {
  int robot = 0;
  int freedom = 0;
  bool arrived = false;
  friend bool operator==(const PriorityEntry&, const PriorityEntry&) = default;
};

/// Robots in planning order: earlier entries plan first. Arrived robots always
/// trail the active ones.
struct PriorityOrder {
  std::vector<PriorityEntry> entries;

  std::vector<int> robot_sequence() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const PriorityEntry& e : entries) out.push_back(e.robot);
    return out;
  }
};

/// Number of next-step choices at u: successors reachable at finite cost under
/// the robot's own cost map. Other robots never reduce freedom, only walls,
/// boundaries and the map's own overrides do.
int compute_freedom(const CostMap& costmap, Cell u);

/// Active robots ascending by freedom at their current cell (ties by robot
/// index), arrived robots appended last in index order.
PriorityOrder order_freedom_index(const std::vector<const CostMap*>& costmaps,
                                  const std::vector<Cell>& positions,
                                  const std::vector<std::uint8_t>& arrived);

/// Static order, descending by initial shortest-path cost to the goal, ties by
/// index. Throws std::invalid_argument when any cost is infinite.
PriorityOrder order_farthest_first(const std::vector<double>& initial_costs);

/// Uniform random permutation; the same seed always yields the same order.
PriorityOrder order_random(int robot_count, std::uint64_t seed);

/// Local search over static orders: starts from the order_random permutation
/// for the same seed, then proposes `budget` random pairwise swaps, keeping a
/// swap only when the evaluated total strictly decreases. The evaluator runs a
/// full simulation and returns the combined path length (infinite on failure).
PriorityOrder order_hill_climb(int robot_count,
                               const std::function<double(const PriorityOrder&)>& evaluate,
                               int budget, std::uint64_t seed);

/// Rebuilds `base` with arrived robots moved to the back, preserving relative
/// order within each group. Used to run static orders through the same
/// per-step loop as the dynamic one.
PriorityOrder partition_arrived(const PriorityOrder& base,
                                const std::vector<std::uint8_t>& arrived);

}  // namespace pdstar
