#include "pdstar/worldgen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

namespace pdstar {

namespace {

constexpr int kRetryLimit = 100;

void check_config(const GenConfig& cfg) {
  if (cfg.width <= 0 || cfg.height <= 0) {
    throw std::invalid_argument("generate: dimensions must be positive");
  }
  if (cfg.density < 0.0 || cfg.density >= 1.0) {
    throw std::invalid_argument("generate: density must be in [0, 1)");
  }
  if (cfg.robots < 0) throw std::invalid_argument("generate: negative robot count");
  const long long cells = static_cast<long long>(cfg.width) * cfg.height;
  const long long obstacles = static_cast<long long>(cfg.density * cells);
  if (obstacles + cfg.robots + 1 > cells) {
    throw std::invalid_argument("generate: no room for obstacles, starts and goal");
  }
}

/// Draws k distinct values from `pool` uniformly, consuming the engine stream.
std::vector<std::size_t> draw_distinct(std::vector<std::size_t> pool, std::size_t k,
                                       std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

/// Cells reachable from `from` over free cells, in BFS order.
std::vector<std::size_t> goal_component(const GridWorld& grid, Cell from) {
  std::vector<std::uint8_t> seen(grid.size(), 0);
  std::deque<Cell> frontier{from};
  seen[grid.index(from)] = 1;
  std::vector<std::size_t> component{grid.index(from)};
  while (!frontier.empty()) {
    const Cell u = frontier.front();
    frontier.pop_front();
    for (const Cell v : successors(grid, u)) {
      const std::size_t vi = grid.index(v);
      if (seen[vi] || grid.is_obstacle(v)) continue;
      seen[vi] = 1;
      component.push_back(vi);
      frontier.push_back(v);
    }
  }
  return component;
}

}  // namespace

Scenario generate(const GenConfig& cfg) {
  check_config(cfg);
  const std::size_t cells = static_cast<std::size_t>(cfg.width) * cfg.height;
  const std::size_t obstacle_count =
      static_cast<std::size_t>(cfg.density * static_cast<double>(cells));
  const Cell goal{cfg.width / 2, cfg.height / 2};
  const std::size_t goal_index = static_cast<std::size_t>(goal.y) * cfg.width + goal.x;

  std::vector<std::size_t> candidates;
  candidates.reserve(cells - 1);
  for (std::size_t i = 0; i < cells; ++i) {
    if (i != goal_index) candidates.push_back(i);
  }

  std::mt19937_64 rng(cfg.seed);
  for (int attempt = 0; attempt < kRetryLimit; ++attempt) {
    const std::vector<std::size_t> drawn = draw_distinct(candidates, obstacle_count, rng);
    std::vector<Cell> obstacles;
    obstacles.reserve(drawn.size());
    for (const std::size_t i : drawn) {
      obstacles.push_back(Cell{static_cast<int>(i % cfg.width), static_cast<int>(i / cfg.width)});
    }
    auto world = std::make_shared<GridWorld>(cfg.width, cfg.height, obstacles);

    std::vector<std::size_t> component = goal_component(*world, goal);
    if (component.size() < static_cast<std::size_t>(cfg.robots) + 1) {
      continue;  // component too small for all starts; redraw obstacles
    }

    component.erase(std::remove(component.begin(), component.end(), goal_index),
                    component.end());
    std::sort(component.begin(), component.end());
    const std::vector<std::size_t> start_indices =
        draw_distinct(std::move(component), static_cast<std::size_t>(cfg.robots), rng);

    Scenario scenario;
    scenario.world = std::move(world);
    scenario.goal = goal;
    scenario.seed = cfg.seed;
    scenario.starts.reserve(cfg.robots);
    for (const std::size_t i : start_indices) {
      scenario.starts.push_back(scenario.world->cell_at(i));
    }
    return scenario;
  }
  throw GenerationFailedError("generate: could not connect " + std::to_string(cfg.robots) +
                              " starts at density " + std::to_string(cfg.density) +
                              " after " + std::to_string(kRetryLimit) + " attempts");
}

std::vector<BatchItem> batch(const std::vector<GenConfig>& configs) {
  std::vector<BatchItem> items;
  items.reserve(configs.size());
  for (const GenConfig& cfg : configs) {
    BatchItem item;
    try {
      item.scenario = generate(cfg);
      item.ok = true;
    } catch (const std::exception& e) {
      item.error = e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace pdstar
