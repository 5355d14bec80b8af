#include <numeric>

#include "doctest.h"
#include "pdstar/engine.hpp"
#include "pdstar/worldgen.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pdstar;

TEST_CASE("single robot on an empty grid takes the Manhattan optimum") {
  Scenario s;
  s.world = test::empty_world(10, 10);
  s.starts = {Cell{0, 0}};
  s.goal = Cell{9, 9};
  const auto result = run(s, Strategy::kFreedom);
  CHECK(result.status == RunStatus::kOk);
  CHECK(result.arrival_steps == std::vector<int>{18});
  CHECK(result.combined_path_length == 18);
  CHECK(result.trajectories[0].size() == 19);
  CHECK(validate(result, s).empty());
}

TEST_CASE("single robot cost equals BFS distance for every strategy") {
  GenConfig cfg;
  cfg.width = cfg.height = 15;
  cfg.density = 0.2;
  cfg.robots = 1;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    cfg.seed = seed;
    const Scenario s = generate(cfg);
    const double expected = test::bfs_distance(*s.world, s.starts[0], s.goal);
    for (const Strategy strategy : all_strategies()) {
      const auto result = run(s, strategy);
      CHECK(result.combined_path_length == static_cast<long long>(expected));
    }
  }
}

TEST_CASE("two scripted conflicts resolve for the lower-freedom robot") {
  const Scenario s = test::two_conflict_scenario();
  const auto result = run(s, Strategy::kFreedom);
  REQUIRE(result.status == RunStatus::kOk);
  REQUIRE(validate(result, s).empty());

  // first contest: robots 0 and 1 both want the corridor mouth (3,4) on step 2
  REQUIRE(result.step_events.size() > 2);
  CHECK(result.step_events[2].rerouted == std::vector<int>{1});
  CHECK(result.trajectories[0][3] == Cell{3, 4});
  CHECK(result.trajectories[1][3] != Cell{3, 4});
  // robot 0 sat in the corridor (freedom 2), robot 1 in the open (freedom 3)
  CostMap map(s.world);
  CHECK(compute_freedom(map, result.trajectories[0][2]) == 2);
  CHECK(compute_freedom(map, result.trajectories[1][2]) == 3);

  // second contest: robots 0 and 2 both want the goal on step 4
  CHECK(result.step_events[4].rerouted == std::vector<int>{2});
  CHECK(result.trajectories[0][5] == s.goal);
  CHECK(result.arrival_steps[0] == 5);
  CHECK(compute_freedom(map, result.trajectories[0][4]) == 2);
  CHECK(compute_freedom(map, result.trajectories[2][4]) == 3);

  // everyone still reaches the goal
  for (int i = 0; i < 3; ++i) CHECK(result.trajectories[i].back() == s.goal);
  CHECK(result.total_forced_stays() == 0);
}

TEST_CASE("multi-robot runs never duplicate an occupied cell") {
  GenConfig cfg;
  cfg.width = cfg.height = 16;
  cfg.density = 0.2;
  cfg.robots = 6;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    cfg.seed = 200 + seed;
    const Scenario s = generate(cfg);
    for (const Strategy strategy : all_strategies()) {
      const auto result = run(s, strategy);
      REQUIRE(result.status == RunStatus::kOk);
      const auto violations = validate(result, s);
      CHECK(violations.empty());
    }
  }
}

TEST_CASE("combined path length never beats the sum of initial costs") {
  GenConfig cfg;
  cfg.width = cfg.height = 14;
  cfg.density = 0.25;
  cfg.robots = 5;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    cfg.seed = 400 + seed;
    const Scenario s = generate(cfg);
    for (const Strategy strategy : all_strategies()) {
      const auto result = run(s, strategy);
      const double floor = std::accumulate(result.initial_costs.begin(),
                                           result.initial_costs.end(), 0.0);
      CHECK(static_cast<double>(result.combined_path_length) >= floor);
    }
  }
}

TEST_CASE("identical inputs reproduce the run exactly") {
  GenConfig cfg;
  cfg.width = cfg.height = 14;
  cfg.density = 0.2;
  cfg.robots = 5;
  cfg.seed = 77;
  const Scenario s = generate(cfg);
  for (const Strategy strategy : all_strategies()) {
    const auto a = run(s, strategy);
    const auto b = run(s, strategy);
    CHECK(a.trajectories == b.trajectories);
    CHECK(a.combined_path_length == b.combined_path_length);
    CHECK(a.steps_run == b.steps_run);
  }
}

TEST_CASE("a walled-off robot raises NoInitialPathError") {
  Scenario s;
  s.world = test::world_with(6, 6, {{1, 0}, {1, 1}, {0, 1}});
  s.starts = {Cell{5, 0}, Cell{0, 0}};  // second robot is boxed in
  s.goal = Cell{5, 5};
  CHECK_THROWS_AS(run(s, Strategy::kFreedom), NoInitialPathError);
  try {
    run(s, Strategy::kFreedom);
  } catch (const NoInitialPathError& e) {
    CHECK(e.robot == 1);
  }
}

TEST_CASE("the step limit turns livelock into a reported partial result") {
  Scenario s;
  s.world = test::empty_world(8, 8);
  s.starts = {Cell{0, 0}, Cell{7, 7}};
  s.goal = Cell{4, 4};
  RunConfig cfg;
  cfg.max_steps = 2;  // far too few to finish
  const auto result = run(s, Strategy::kFreedom, cfg);
  CHECK(result.status == RunStatus::kStepLimit);
  CHECK(result.steps_run == 2);
  CHECK(result.trajectories[0].size() == 3);
  CHECK(result.arrival_steps[0] == -1);
}

TEST_CASE("scenario validation rejects malformed inputs") {
  const auto world = test::world_with(6, 6, {{2, 2}});
  Scenario s;
  s.world = world;
  s.goal = Cell{5, 5};

  s.starts = {Cell{0, 0}, Cell{0, 0}};
  CHECK_THROWS_AS(validate_scenario(s), std::invalid_argument);
  s.starts = {Cell{2, 2}};
  CHECK_THROWS_AS(validate_scenario(s), std::invalid_argument);
  s.starts = {Cell{5, 5}};
  CHECK_THROWS_AS(validate_scenario(s), std::invalid_argument);
  s.starts = {Cell{0, 0}};
  s.goal = Cell{2, 2};
  CHECK_THROWS_AS(validate_scenario(s), std::invalid_argument);
  s.goal = Cell{5, 5};
  CHECK_NOTHROW(validate_scenario(s));
}

TEST_CASE("validate accepts a clean run and flags constructed defects") {
  Scenario s;
  s.world = test::empty_world(6, 6);
  s.starts = {Cell{0, 0}, Cell{5, 0}};
  s.goal = Cell{3, 3};
  auto result = run(s, Strategy::kFreedom);
  REQUIRE(validate(result, s).empty());

  SUBCASE("two robots sharing a cell is a vertex collision") {
    auto broken = result;
    REQUIRE(broken.trajectories[0].size() > 3);
    REQUIRE(broken.trajectories[1].size() > 3);
    broken.trajectories[1][3] = broken.trajectories[0][3];
    bool found = false;
    for (const auto& v : validate(broken, s)) {
      if (v.kind == Violation::Kind::kVertexCollision && v.step == 3) found = true;
    }
    CHECK(found);
  }
  SUBCASE("a diagonal move is illegal") {
    auto broken = result;
    const Cell c = broken.trajectories[0][1];
    broken.trajectories[0][2] = Cell{c.x + 1, c.y + 1};
    bool found = false;
    for (const auto& v : validate(broken, s)) {
      if (v.kind == Violation::Kind::kIllegalMove) found = true;
    }
    CHECK(found);
  }
  SUBCASE("an unrecorded stay is flagged") {
    auto broken = result;
    broken.trajectories[0][2] = broken.trajectories[0][1];
    bool found = false;
    for (const auto& v : validate(broken, s)) {
      if (v.kind == Violation::Kind::kUnexplainedStay) found = true;
    }
    CHECK(found);
  }
  SUBCASE("a wrong endpoint is flagged") {
    auto broken = result;
    broken.trajectories[0].front() = Cell{1, 1};
    bool found = false;
    for (const auto& v : validate(broken, s)) {
      if (v.kind == Violation::Kind::kBadEndpoint) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("every forced stay coincides with a fallback exhaustion") {
  // audited directly by validate: stays must be recorded, and recorded stays
  // must be real; sweep a few congested scenarios through all strategies
  GenConfig cfg;
  cfg.width = cfg.height = 10;
  cfg.density = 0.3;
  cfg.robots = 6;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    cfg.seed = 900 + seed;
    Scenario s;
    try {
      s = generate(cfg);
    } catch (const GenerationFailedError&) {
      continue;
    }
    for (const Strategy strategy : all_strategies()) {
      const auto result = run(s, strategy);
      CHECK(validate(result, s).empty());
    }
  }
}

TEST_CASE("strategy names round-trip") {
  for (const Strategy strategy : all_strategies()) {
    CHECK(strategy_from_name(strategy_name(strategy)) == strategy);
  }
  CHECK_THROWS_AS(strategy_from_name("nope"), std::invalid_argument);
}

TEST_CASE("zero robots complete immediately") {
  Scenario s;
  s.world = test::empty_world(4, 4);
  s.goal = Cell{2, 2};
  const auto result = run(s, Strategy::kFreedom);
  CHECK(result.status == RunStatus::kOk);
  CHECK(result.steps_run == 0);
  CHECK(result.combined_path_length == 0);
}
