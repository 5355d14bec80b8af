#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pdstar/engine.hpp"
#include "pdstar/grid.hpp"
#include "pdstar/scenario_io.hpp"

namespace pdstar::test {

inline std::shared_ptr<const GridWorld> empty_world(int w, int h) {
  return std::make_shared<GridWorld>(w, h);
}

inline std::shared_ptr<const GridWorld> world_with(int w, int h,
                                                   const std::vector<Cell>& obstacles) {
  return std::make_shared<GridWorld>(w, h, obstacles);
}

/// Three robots, one goal, two walled corridors. Robot 0 reaches the corridor
/// mouth (3,4) and the goal in narrow spots where its freedom stays below the
/// open-field robots, forcing it to win both scripted contests: robot 1 at the
/// mouth on step 2->3, robot 2 at the goal on step 4->5.
inline const char* kTwoConflictScenarioText =
    "10 10\n"
    "5 4\n"
    "3\n"
    "3 1\n"
    "0 4\n"
    "5 9\n"
    "..........\n"
    "..#0#.....\n"
    "..#.#.....\n"
    "..#.#.....\n"
    "1....G#...\n"
    "...##.....\n"
    "..........\n"
    "..........\n"
    "..........\n"
    ".....2....\n";

inline Scenario two_conflict_scenario() {
  return parse_scenario_text(kTwoConflictScenarioText);
}

}  // namespace pdstar::test
