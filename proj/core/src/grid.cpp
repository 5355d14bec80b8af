#include "pdstar/grid.hpp"

#include <stdexcept>
#include <string>

namespace pdstar {

GridWorld::GridWorld(int width, int height, const std::vector<Cell>& obstacles)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("GridWorld: dimensions must be positive");
  }
  blocked_.assign(static_cast<std::size_t>(width) * height, 0);
  for (const Cell c : obstacles) {
    if (!in_bounds(c)) {
      throw std::invalid_argument("GridWorld: obstacle (" + std::to_string(c.x) + "," +
                                  std::to_string(c.y) + ") out of bounds");
    }
    blocked_[index(c)] = 1;  // duplicates collapse, set semantics
  }
  for (const std::uint8_t b : blocked_) obstacle_count_ += b;
}

std::vector<Cell> GridWorld::obstacles() const {
  std::vector<Cell> out;
  out.reserve(obstacle_count_);
  for (std::size_t i = 0; i < blocked_.size(); ++i) {
    if (blocked_[i]) out.push_back(cell_at(i));
  }
  return out;
}

std::vector<Cell> successors(const GridWorld& grid, Cell u) {
  if (!grid.in_bounds(u)) {
    throw std::out_of_range("successors: cell out of bounds");
  }
  std::vector<Cell> out;
  out.reserve(4);
  for (const Cell d : kNeighborSteps) {
    const Cell v{u.x + d.x, u.y + d.y};
    if (grid.in_bounds(v)) out.push_back(v);
  }
  return out;
}

CostMap::CostMap(std::shared_ptr<const GridWorld> world) : world_(std::move(world)) {
  if (!world_) throw std::invalid_argument("CostMap: null grid");
}

double CostMap::cost(Cell u, Cell v) const {
  if (!world_->in_bounds(u) || !world_->in_bounds(v)) {
    throw std::out_of_range("CostMap::cost: cell out of bounds");
  }
  if (manhattan(u, v) != 1) return kInfiniteCost;
  if (const auto it = overrides_.find(edge_key(u, v)); it != overrides_.end()) {
    return it->second;
  }
  return world_->is_obstacle(v) ? kInfiniteCost : 1.0;
}

void CostMap::set_cost(Cell u, Cell v, double cost) {
  if (!world_->in_bounds(u) || !world_->in_bounds(v) || manhattan(u, v) != 1) {
    throw std::invalid_argument("CostMap::set_cost: not a neighbor pair");
  }
  if (cost != 1.0 && cost != kInfiniteCost) {
    throw std::invalid_argument("CostMap::set_cost: cost must be 1 or infinite");
  }
  overrides_[edge_key(u, v)] = cost;
}

std::vector<Cell> successors(const CostMap& map, Cell u) {
  return successors(map.grid(), u);
}

CostMap add_virtual_obstacle(const CostMap& map, Cell from, Cell to) {
  CostMap copy = map;
  copy.set_cost(from, to, kInfiniteCost);
  return copy;
}

}  // namespace pdstar
