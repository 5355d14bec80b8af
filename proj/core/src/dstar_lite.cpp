#include "pdstar/dstar_lite.hpp"

#include <algorithm>

namespace pdstar {

DStarLite::DStarLite(CostMap costmap, Cell start, Cell goal)
    : costmap_(std::move(costmap)), start_(start), goal_(goal), s_last_(start) {
  const GridWorld& grid = costmap_.grid();
  if (!grid.in_bounds(start) || grid.is_obstacle(start)) {
    throw std::invalid_argument("DStarLite: start must be a free in-bounds cell");
  }
  if (!grid.in_bounds(goal) || grid.is_obstacle(goal)) {
    throw std::invalid_argument("DStarLite: goal must be a free in-bounds cell");
  }
  g_.assign(grid.size(), kInfiniteCost);
  rhs_.assign(grid.size(), kInfiniteCost);
  in_queue_.assign(grid.size(), 0);
  queued_key_.assign(grid.size(), Key{});
  rhs_[idx(goal_)] = 0.0;
  queue_insert(idx(goal_), calculate_key(goal_));
}

Key DStarLite::calculate_key(Cell s) const {
  const std::size_t i = idx(s);
  const double m = std::min(g_[i], rhs_[i]);
  return Key{m + manhattan(start_, s) + km_, m};
}

void DStarLite::queue_insert(std::size_t i, Key k) {
  queue_.insert(QueueEntry{k, static_cast<std::uint32_t>(i)});
  in_queue_[i] = 1;
  queued_key_[i] = k;
}

void DStarLite::queue_remove(std::size_t i) {
  queue_.erase(QueueEntry{queued_key_[i], static_cast<std::uint32_t>(i)});
  in_queue_[i] = 0;
}

void DStarLite::update_vertex(Cell u) {
  ++stats_.vertex_updates;
  const std::size_t i = idx(u);
  if (!(u == goal_)) {
    double best = kInfiniteCost;
    for (const Cell s : successors(costmap_.grid(), u)) {
      best = std::min(best, costmap_.cost(u, s) + g_[idx(s)]);
    }
    rhs_[i] = best;
  }
  if (in_queue_[i]) queue_remove(i);
  if (g_[i] != rhs_[i]) queue_insert(i, calculate_key(u));
}

void DStarLite::compute_shortest_path() {
  const std::size_t si = idx(start_);
  while (!queue_.empty()) {
    const QueueEntry top = *queue_.begin();
    if (!(top.key < calculate_key(start_)) && g_[si] == rhs_[si]) break;

    const Cell u = cell_at(top.cell);
    const std::size_t ui = top.cell;
    queue_remove(ui);
    ++stats_.pops;

    const Key k_new = calculate_key(u);
    if (top.key < k_new) {
      // stale key from before the start moved; requeue with a fresh one
      queue_insert(ui, k_new);
    } else if (g_[ui] > rhs_[ui]) {
      g_[ui] = rhs_[ui];
      ++stats_.expansions;
      for (const Cell s : successors(costmap_.grid(), u)) update_vertex(s);
    } else {
      g_[ui] = kInfiniteCost;
      ++stats_.expansions;
      update_vertex(u);
      for (const Cell s : successors(costmap_.grid(), u)) update_vertex(s);
    }
  }
}

Cell DStarLite::next_step() const {
  if (start_ == goal_) return goal_;
  if (g_[idx(start_)] == kInfiniteCost) throw NoPathError{};
  Cell best = start_;
  double best_cost = kInfiniteCost;
  for (const Cell s : successors(costmap_.grid(), start_)) {
    const double c = costmap_.cost(start_, s) + g_[idx(s)];
    if (c < best_cost) {
      best_cost = c;
      best = s;
    }
  }
  if (best_cost == kInfiniteCost) throw NoPathError{};
  return best;
}

void DStarLite::apply_edge_changes(const std::vector<EdgeChange>& changes, Cell new_start) {
  if (!costmap_.grid().in_bounds(new_start)) {
    throw std::invalid_argument("apply_edge_changes: start out of bounds");
  }
  km_ += manhattan(s_last_, new_start);
  s_last_ = new_start;
  start_ = new_start;
  for (const EdgeChange& ch : changes) {
    costmap_.set_cost(ch.from, ch.to, ch.new_cost);
    update_vertex(ch.from);
  }
  compute_shortest_path();
}

std::vector<std::pair<Cell, Key>> DStarLite::queue_snapshot() const {
  std::vector<std::pair<Cell, Key>> out;
  out.reserve(queue_.size());
  for (const QueueEntry& e : queue_) out.emplace_back(cell_at(e.cell), e.key);
  return out;
}

}  // namespace pdstar
