#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <unordered_map>
#include <vector>

namespace pdstar {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

/// Grid coordinate. x is the column (0 at the left edge), y the row (0 at the top).
struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(Cell, Cell) = default;
};

constexpr bool row_major_less(Cell a, Cell b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

constexpr int manhattan(Cell a, Cell b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

struct CellHash {
  std::size_t operator()(Cell c) const noexcept {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y)) << 32) |
        static_cast<std::uint32_t>(c.x));
  }
};

/// Neighbor offsets in the fixed expansion order: up, down, left, right.
/// Every tie-break in the planner and the simulation inherits this order.
inline constexpr std::array<Cell, 4> kNeighborSteps{{{0, -1}, {0, 1}, {-1, 0}, {1, 0}}};

/// Static 4-connected occupancy grid. Immutable after construction and safe to
/// share between planners.
class GridWorld {
 public:
  GridWorld(int width, int height, const std::vector<Cell>& obstacles = {});

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return blocked_.size(); }

  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  bool is_obstacle(Cell c) const { return blocked_[index(c)] != 0; }

  int obstacle_count() const { return obstacle_count_; }
  /// Obstacle cells in row-major order.
  std::vector<Cell> obstacles() const;

  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.y) * width_ + c.x;
  }
  Cell cell_at(std::size_t i) const {
    return Cell{static_cast<int>(i % width_), static_cast<int>(i / width_)};
  }

  friend bool operator==(const GridWorld& a, const GridWorld& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.blocked_ == b.blocked_;
  }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> blocked_;
  int obstacle_count_ = 0;
};

/// In-bounds 4-neighbors of u in the fixed (up, down, left, right) order.
/// Obstacle cells are included; cost queries tell them apart.
std::vector<Cell> successors(const GridWorld& grid, Cell u);

/// Edge-cost view of a GridWorld plus directed per-edge overrides. Base cost of
/// moving u -> v is 1 for a free 4-neighbor v and infinite when v is a wall or
/// out of reach. Overrides take precedence over the base grid, so a planner can
/// both inject virtual obstacles (finite -> infinite) and absorb grid edits in
/// either direction.
class CostMap {
 public:
  explicit CostMap(std::shared_ptr<const GridWorld> world);

  const GridWorld& grid() const { return *world_; }
  const std::shared_ptr<const GridWorld>& grid_ptr() const { return world_; }

  double cost(Cell u, Cell v) const;

  /// Overrides the directed edge (u, v). cost must be 1 or infinite.
  void set_cost(Cell u, Cell v, double cost);

  std::size_t override_count() const { return overrides_.size(); }

  friend bool operator==(const CostMap& a, const CostMap& b) {
    return *a.world_ == *b.world_ && a.overrides_ == b.overrides_;
  }

 private:
  std::uint64_t edge_key(Cell u, Cell v) const {
    return (static_cast<std::uint64_t>(world_->index(u)) << 32) |
           static_cast<std::uint64_t>(world_->index(v));
  }

  std::shared_ptr<const GridWorld> world_;
  std::unordered_map<std::uint64_t, double> overrides_;
};

std::vector<Cell> successors(const CostMap& map, Cell u);

/// Copy of `map` with the directed edge (from, to) made impassable. The input
/// map is left untouched.
CostMap add_virtual_obstacle(const CostMap& map, Cell from, Cell to);

}  // namespace pdstar
