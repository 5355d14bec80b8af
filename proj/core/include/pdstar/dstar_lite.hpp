#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pdstar/grid.hpp"

namespace pdstar {

/// Queue priority. Compared lexicographically; infinities compare the usual
/// IEEE way, so Key{inf, inf} == Key{inf, inf} and any finite key sorts first.
struct Key {
  double k1 = 0.0;
  double k2 = 0.0;

  friend bool operator==(const Key&, const Key&) = default;
  friend bool operator<(const Key& a, const Key& b) {
    if (a.k1 != b.k1) return a.k1 < b.k1;
    return a.k2 < b.k2;
  }
};

struct EdgeChange {
  Cell from;
  Cell to;
  double new_cost = kInfiniteCost;
};

struct NoPathError : std::runtime_error {
  NoPathError() : std::runtime_error("no path from start to goal") {}
};

/// Incremental shortest-path search over a CostMap, planned from the goal
/// toward the moving start. g(s) estimates the cost from s to the goal; rhs(s)
/// is the one-step look-ahead min over successors of cost(s, s') + g(s'). The
/// queue holds exactly the locally inconsistent cells (g != rhs). The heuristic
/// is Manhattan distance, which is consistent on a unit-cost 4-connected grid.
///
/// Copying a planner produces a fully independent deep copy; the conflict
/// resolver relies on that to replan on throwaway clones.
class DStarLite {
 public:
  /// Sets up the initial search state: every g and rhs infinite except
  /// rhs(goal) = 0, with the goal as the only queued cell.
  DStarLite(CostMap costmap, Cell start, Cell goal);

  /// Runs the repair loop until the start is settled. On return, g(start) is
  /// the shortest-path cost under the current cost map, or infinite when the
  /// goal cannot be reached.
  void compute_shortest_path();

  /// Successor of the current start minimizing cost(start, s') + g(s'), ties
  /// broken by the fixed successor order. Returns the goal itself once the
  /// start sits on it. Throws NoPathError when g(start) is infinite.
  Cell next_step() const;

  /// Applies edge-cost updates and/or a start move, then repairs the search.
  /// The key modifier absorbs the heuristic drift of the moving start so stale
  /// queue keys stay valid lower bounds.
  void apply_edge_changes(const std::vector<EdgeChange>& changes, Cell new_start);

  Key calculate_key(Cell s) const;
  void update_vertex(Cell u);

  double g(Cell s) const { return g_[costmap_.grid().index(s)]; }
  double rhs(Cell s) const { return rhs_[costmap_.grid().index(s)]; }
  double k_m() const { return km_; }
  Cell start() const { return start_; }
  Cell goal() const { return goal_; }
  const CostMap& costmap() const { return costmap_; }

  std::size_t queue_size() const { return queue_.size(); }
  bool in_queue(Cell s) const { return in_queue_[costmap_.grid().index(s)] != 0; }
  /// Queue contents sorted by (key, cell index); for tests and diagnostics.
  std::vector<std::pair<Cell, Key>> queue_snapshot() const;

  struct Stats {
    std::uint64_t pops = 0;
    std::uint64_t expansions = 0;
    std::uint64_t vertex_updates = 0;
  };
  const Stats& stats() const { return stats_; }

 private:
  struct QueueEntry {
    Key key;
    std::uint32_t cell = 0;
    friend bool operator<(const QueueEntry& a, const QueueEntry& b) {
      if (a.key != b.key) return a.key < b.key;
      return a.cell < b.cell;
    }
  };

  std::size_t idx(Cell c) const { return costmap_.grid().index(c); }
  Cell cell_at(std::size_t i) const { return costmap_.grid().cell_at(i); }

  void queue_insert(std::size_t i, Key k);
  void queue_remove(std::size_t i);

  CostMap costmap_;
  Cell start_;
  Cell goal_;
  Cell s_last_;
  double km_ = 0.0;
  std::vector<double> g_;
  std::vector<double> rhs_;
  std::set<QueueEntry> queue_;
  std::vector<std::uint8_t> in_queue_;
  std::vector<Key> queued_key_;
  Stats stats_;
};

}  // namespace pdstar
