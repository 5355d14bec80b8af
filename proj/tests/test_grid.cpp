#include <random>

#include "doctest.h"
#include "pdstar/grid.hpp"
#include "support/fixtures.hpp"

using namespace pdstar;

TEST_CASE("successors for an interior cell follow the fixed order") {
  GridWorld grid(10, 10);
  CHECK(successors(grid, Cell{5, 5}) ==
        std::vector<Cell>{{5, 4}, {5, 6}, {4, 5}, {6, 5}});
}

TEST_CASE("successors clip out-of-bounds neighbors at a corner") {
  GridWorld grid(10, 10);
  CHECK(successors(grid, Cell{0, 0}) == std::vector<Cell>{{0, 1}, {1, 0}});
}

TEST_CASE("successors on a single-row grid") {
  GridWorld grid(3, 1);
  CHECK(successors(grid, Cell{1, 0}) == std::vector<Cell>{{0, 0}, {2, 0}});
}

TEST_CASE("successors rejects an out-of-bounds query") {
  GridWorld grid(4, 4);
  CHECK_THROWS_AS(successors(grid, Cell{4, 0}), std::out_of_range);
}

TEST_CASE("successor counts and bounds hold across random cells") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 12);
    const int h = 1 + static_cast<int>(rng() % 12);
    GridWorld grid(w, h);
    const Cell u{static_cast<int>(rng() % w), static_cast<int>(rng() % h)};
    const auto succ = successors(grid, u);
    CHECK(succ.size() >= (w == 1 && h == 1 ? 0u : 1u));
    CHECK(succ.size() <= 4u);
    for (const Cell v : succ) {
      CHECK(grid.in_bounds(v));
      CHECK(manhattan(u, v) == 1);
    }
  }
}

TEST_CASE("cost of a free neighbor edge is 1") {
  CostMap map(test::empty_world(6, 6));
  CHECK(map.cost(Cell{2, 2}, Cell{2, 3}) == 1.0);
}

TEST_CASE("cost into an obstacle is infinite, out of one is not") {
  CostMap map(test::world_with(6, 6, {{2, 3}}));
  CHECK(map.cost(Cell{2, 2}, Cell{2, 3}) == kInfiniteCost);
  CHECK(map.cost(Cell{2, 3}, Cell{2, 2}) == 1.0);
}

TEST_CASE("cost of a non-neighbor pair is infinite") {
  CostMap map(test::empty_world(6, 6));
  CHECK(map.cost(Cell{0, 0}, Cell{2, 0}) == kInfiniteCost);
  CHECK(map.cost(Cell{0, 0}, Cell{1, 1}) == kInfiniteCost);
}

TEST_CASE("virtual obstacle blocks exactly the directed edge") {
  CostMap map(test::empty_world(6, 6));
  const CostMap blocked = add_virtual_obstacle(map, Cell{2, 2}, Cell{2, 3});
  CHECK(blocked.cost(Cell{2, 2}, Cell{2, 3}) == kInfiniteCost);
  CHECK(blocked.cost(Cell{2, 3}, Cell{2, 2}) == 1.0);  // reverse edge untouched
  // the source map is a copy, not an alias
  CHECK(map.cost(Cell{2, 2}, Cell{2, 3}) == 1.0);
  CHECK(map.override_count() == 0);
}

TEST_CASE("repeated virtual obstacle is idempotent") {
  CostMap map(test::empty_world(6, 6));
  CostMap blocked = add_virtual_obstacle(map, Cell{1, 1}, Cell{1, 2});
  blocked = add_virtual_obstacle(blocked, Cell{1, 1}, Cell{1, 2});
  CHECK(blocked.cost(Cell{1, 1}, Cell{1, 2}) == kInfiniteCost);
  CHECK(blocked.override_count() == 1);
}

TEST_CASE("virtual obstacle leaves every other edge alone") {
  const auto world = test::world_with(8, 8, {{4, 4}, {1, 6}});
  CostMap map(world);
  const CostMap blocked = add_virtual_obstacle(map, Cell{3, 3}, Cell{3, 4});
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      const Cell u{x, y};
      for (const Cell v : successors(*world, u)) {
        if (u == Cell{3, 3} && v == Cell{3, 4}) continue;
        CHECK(map.cost(u, v) == blocked.cost(u, v));
      }
    }
  }
}

TEST_CASE("base edge costs are symmetric between free cells") {
  const auto world = test::world_with(8, 8, {{2, 2}, {5, 1}, {6, 6}});
  CostMap map(world);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      const Cell u{x, y};
      if (world->is_obstacle(u)) continue;
      for (const Cell v : successors(*world, u)) {
        if (world->is_obstacle(v)) continue;
        CHECK(map.cost(u, v) == map.cost(v, u));
      }
    }
  }
}

TEST_CASE("set_cost can reopen an edge into a former obstacle") {
  CostMap map(test::world_with(6, 6, {{3, 3}}));
  map.set_cost(Cell{3, 2}, Cell{3, 3}, 1.0);
  CHECK(map.cost(Cell{3, 2}, Cell{3, 3}) == 1.0);
  CHECK(map.cost(Cell{4, 3}, Cell{3, 3}) == kInfiniteCost);
}

TEST_CASE("grid construction validates obstacles and deduplicates") {
  CHECK_THROWS_AS(GridWorld(4, 4, {{4, 0}}), std::invalid_argument);
  GridWorld grid(4, 4, {{1, 1}, {1, 1}});
  CHECK(grid.obstacle_count() == 1);
  CHECK(grid.obstacles() == std::vector<Cell>{{1, 1}});
}
