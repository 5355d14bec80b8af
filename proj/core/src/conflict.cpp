#include "pdstar/conflict.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pdstar {

std::vector<std::pair<int, int>> detect_collisions(const std::vector<Cell>& proposed,
                                                   const std::vector<Cell>& current,
                                                   const std::vector<std::uint8_t>& active,
                                                   bool swap_check) {
  const int n = static_cast<int>(proposed.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    if (!active[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!active[j]) continue;
      const bool vertex = proposed[i] == proposed[j];
      const bool swap =
          swap_check && proposed[i] == current[j] && proposed[j] == current[i];
      if (vertex || swap) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

namespace {

enum class Outcome { kNone, kClean, kRerouted, kFellBack, kForcedStay };

}  // namespace

std::pair<StepPlan, StepEvents> resolve_conflicts(const StepPlan& plan,
                                                  const std::vector<DStarLite>& planners,
                                                  const ConflictConfig& config) {
  const std::size_t n = plan.proposed.size();
  if (planners.size() != n || plan.previous.size() != n) {
    throw std::invalid_argument("resolve_conflicts: mismatched input sizes");
  }

  StepPlan out = plan;
  std::vector<std::uint8_t> committed(n, 0);
  std::vector<Cell> committed_cell(n);
  std::vector<Outcome> outcome(n, Outcome::kNone);

  // Candidate conflicts with any robot committed so far: same cell, or
  // (optionally) a head-on swap through it.
  const auto conflicts = [&](Cell candidate, Cell current) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!committed[j]) continue;
      if (committed_cell[j] == candidate) return true;
      if (config.forbid_swaps && committed_cell[j] == current &&
          candidate == planners[j].start()) {
        return true;
      }
    }
    return false;
  };

  // Resolves one robot against the current committed set. Returns the robot
  // whose earlier commitment had to be revoked, or -1. A revocation happens
  // when this robot is forced to keep its own cell although a mover already
  // claimed it; letting the mover in would be a collision, so the mover has to
  // re-resolve instead.
  const auto resolve_one = [&](int i) -> int {
    const Cell current = planners[i].start();
    Cell candidate = plan.proposed[i];

    if (!conflicts(candidate, current)) {
      committed[i] = 1;
      committed_cell[i] = candidate;
      out.proposed[i] = candidate;
      outcome[i] = Outcome::kClean;
      return -1;
    }

    DStarLite clone = planners[i];
    std::optional<Cell> resolved;
    while (true) {
      clone.apply_edge_changes({EdgeChange{current, candidate, kInfiniteCost}}, current);
      if (clone.g(current) == kInfiniteCost) break;  // the clone ran out of paths
      candidate = clone.next_step();
      if (!conflicts(candidate, current)) {
        resolved = candidate;
        break;
      }
    }

    if (resolved) {
      out.proposed[i] = *resolved;
      outcome[i] = Outcome::kRerouted;
      committed[i] = 1;
      committed_cell[i] = *resolved;
      return -1;
    }

    // No path at all; make a safety move. Retreating to the previous cell
    // comes first, then any free uncommitted successor, then staying put.
    const Cell previous = plan.previous[i];
    std::optional<Cell> safety;
    if (!(previous == current) && !conflicts(previous, current)) {
      safety = previous;
    } else {
      const CostMap& map = planners[i].costmap();
      for (const Cell s : successors(map, current)) {
        if (s == previous) continue;  // already rejected
        if (map.cost(current, s) == kInfiniteCost) continue;
        if (conflicts(s, current)) continue;
        safety = s;
        break;
      }
    }
    if (safety) {
      out.proposed[i] = *safety;
      outcome[i] = Outcome::kFellBack;
      committed[i] = 1;
      committed_cell[i] = *safety;
      return -1;
    }

    int revoked = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (committed[j] && committed_cell[j] == current) {
        committed[j] = 0;  // the mover must pick somewhere else
        revoked = static_cast<int>(j);
        break;
      }
    }
    out.proposed[i] = current;
    outcome[i] = Outcome::kForcedStay;
    committed[i] = 1;
    committed_cell[i] = current;
    return revoked;
  };

  for (const PriorityEntry& entry : plan.order.entries) {
    if (entry.arrived) continue;
    int next = entry.robot;
    // Each revocation is backed by a fresh forced stay and every robot stays at
    // most once per step, so this chain terminates.
    while (next >= 0) next = resolve_one(next);
  }

  StepEvents events;
  for (std::size_t i = 0; i < n; ++i) {
    switch (outcome[i]) {
      case Outcome::kRerouted: events.rerouted.push_back(static_cast<int>(i)); break;
      case Outcome::kFellBack: events.fell_back.push_back(static_cast<int>(i)); break;
      case Outcome::kForcedStay: events.forced_stay.push_back(static_cast<int>(i)); break;
      default: break;
    }
  }
  return {out, events};
}

}  // namespace pdstar
