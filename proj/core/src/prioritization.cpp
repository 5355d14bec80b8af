#include "pdstar/prioritization.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pdstar {

namespace {

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  return perm;
}

PriorityOrder order_from_sequence(const std::vector<int>& robots) {
  PriorityOrder order;
  order.entries.reserve(robots.size());
  for (const int r : robots) order.entries.push_back(PriorityEntry{r, 0, false});
  return order;
}

}  // namespace

int compute_freedom(const CostMap& costmap, Cell u) {
  int freedom = 0;
  for (const Cell s : successors(costmap, u)) {
    if (costmap.cost(u, s) != kInfiniteCost) ++freedom;
  }
  return freedom;
}

PriorityOrder order_freedom_index(const std::vector<const CostMap*>& costmaps,
                                  const std::vector<Cell>& positions,
                                  const std::vector<std::uint8_t>& arrived) {
  const int n = static_cast<int>(positions.size());
  if (costmaps.size() != positions.size() || arrived.size() != positions.size()) {
    throw std::invalid_argument("order_freedom_index: mismatched input sizes");
  }
  PriorityOrder order;
  order.entries.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (arrived[i]) continue;
    order.entries.push_back(PriorityEntry{i, compute_freedom(*costmaps[i], positions[i]), false});
  }
  std::sort(order.entries.begin(), order.entries.end(),
            [](const PriorityEntry& a, const PriorityEntry& b) {
              if (a.freedom != b.freedom) return a.freedom < b.freedom;
              return a.robot < b.robot;
            });
  for (int i = 0; i < n; ++i) {
    if (arrived[i]) order.entries.push_back(PriorityEntry{i, 0, true});
  }
  return order;
}

PriorityOrder order_farthest_first(const std::vector<double>& initial_costs) {
  const int n = static_cast<int>(initial_costs.size());
  for (const double c : initial_costs) {
    if (c == kInfiniteCost) {
      throw std::invalid_argument("order_farthest_first: robot with no path to goal");
    }
  }
  std::vector<int> robots(n);
  for (int i = 0; i < n; ++i) robots[i] = i;
  std::sort(robots.begin(), robots.end(), [&](int a, int b) {
    if (initial_costs[a] != initial_costs[b]) return initial_costs[a] > initial_costs[b];
    return a < b;
  });
  return order_from_sequence(robots);
}

PriorityOrder order_random(int robot_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return order_from_sequence(random_permutation(robot_count, rng));
}

PriorityOrder order_hill_climb(int robot_count,
                               const std::function<double(const PriorityOrder&)>& evaluate,
                               int budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> current = random_permutation(robot_count, rng);
  PriorityOrder best = order_from_sequence(current);
  if (robot_count < 2) return best;

  double best_cost = evaluate(best);
  for (int proposal = 0; proposal < budget; ++proposal) {
    std::uniform_int_distribution<int> first(0, robot_count - 1);
    std::uniform_int_distribution<int> second(0, robot_count - 2);
    const int a = first(rng);
    int b = second(rng);
    if (b >= a) ++b;
    std::swap(current[a], current[b]);
    const PriorityOrder candidate = order_from_sequence(current);
    const double cost = evaluate(candidate);
    if (cost < best_cost) {
      best_cost = cost;
      best = candidate;
    } else {
      std::swap(current[a], current[b]);  // revert
    }
  }
  return best;
}

PriorityOrder partition_arrived(const PriorityOrder& base,
                                const std::vector<std::uint8_t>& arrived) {
  PriorityOrder out;
  out.entries.reserve(base.entries.size());
  for (const PriorityEntry& e : base.entries) {
    if (!arrived[e.robot]) out.entries.push_back(PriorityEntry{e.robot, e.freedom, false});
  }
  for (const PriorityEntry& e : base.entries) {
    if (arrived[e.robot]) out.entries.push_back(PriorityEntry{e.robot, e.freedom, true});
  }
  return out;
}

}  // namespace pdstar
