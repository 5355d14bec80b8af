#include <sstream>

#include "doctest.h"
#include "pdstar/report.hpp"
#include "pdstar/scenario_io.hpp"
#include "pdstar/worldgen.hpp"
#include "support/fixtures.hpp"

using namespace pdstar;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("ascii render of an empty grid shows the goal at the center") {
  Scenario s;
  s.world = test::empty_world(3, 3);
  s.goal = Cell{1, 1};
  const std::string text = render_ascii(s);
  CHECK(text == "...\n.G.\n...\n");
}

TEST_CASE("ascii render shows each obstacle exactly once") {
  Scenario s;
  s.world = test::world_with(4, 4, {{2, 1}});
  s.goal = Cell{0, 0};
  const std::string text = render_ascii(s);
  CHECK(count_occurrences(text, "#") == 1);
}

TEST_CASE("ascii body round-trips through the text scenario format") {
  GenConfig cfg;
  cfg.width = 11;
  cfg.height = 7;
  cfg.density = 0.2;
  cfg.robots = 3;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    cfg.seed = seed;
    const Scenario s = generate(cfg);
    // the text file body is exactly the rendered grid
    const std::string file = write_scenario_text(s);
    CHECK(file.find(render_ascii(s)) != std::string::npos);
    const Scenario parsed = parse_scenario_text(file);
    CHECK(*parsed.world == *s.world);
    CHECK(parsed.starts == s.starts);
    CHECK(parsed.goal == s.goal);
  }
}

TEST_CASE("ascii render marks trajectories with robot markers") {
  const Scenario s = test::two_conflict_scenario();
  const auto result = run(s, Strategy::kFreedom);
  const std::string text = render_ascii(s, &result);
  CHECK(count_occurrences(text, "0") > 1);  // the start marker plus path cells
  CHECK(count_occurrences(text, "#") == 9);
}

TEST_CASE("svg without a result has obstacles and goal but no polylines") {
  Scenario s;
  s.world = test::world_with(5, 5, {{1, 1}, {3, 2}});
  s.goal = Cell{2, 2};
  const std::string svg = render_svg(s, nullptr);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "<polyline") == 0);
  CHECK(count_occurrences(svg, "fill=\"#2e8b57\"") == 1);
}

TEST_CASE("svg draws one polyline per robot") {
  const Scenario s = test::two_conflict_scenario();
  const auto result = run(s, Strategy::kFreedom);
  const std::string svg = render_svg(s, &result);
  CHECK(count_occurrences(svg, "<polyline") == 3);
  CHECK(count_occurrences(svg, "<circle") == 3);
}

TEST_CASE("svg output is byte-identical across calls") {
  const Scenario s = test::two_conflict_scenario();
  const auto result = run(s, Strategy::kFreedom);
  RenderSpec spec;
  spec.annotate_steps = true;
  CHECK(render_svg(s, &result, spec) == render_svg(s, &result, spec));
}

TEST_CASE("svg validates its render spec") {
  Scenario s;
  s.world = test::empty_world(2, 2);
  s.goal = Cell{0, 0};
  RenderSpec spec;
  spec.cell_px = 0;
  CHECK_THROWS_AS(render_svg(s, nullptr, spec), std::invalid_argument);
}

TEST_CASE("plot data of an empty summary is headers only") {
  const auto csvs = emit_plot_data(Summary{});
  REQUIRE(csvs.size() == 3);
  for (const NamedCsv& csv : csvs) {
    CHECK(count_occurrences(csv.content, "\n") == 1);  // just the header line
  }
}

TEST_CASE("plot data cardinality follows the summary cells") {
  Summary summary;
  for (const double density : {0.1, 0.2, 0.3, 0.4}) {
    for (const int robots : {5, 10}) {
      for (const Strategy strategy : all_strategies()) {
        CellSummary cell;
        cell.density = density;
        cell.robots = robots;
        cell.strategy = strategy;
        cell.stats.runs_ok = 1;
        cell.stats.mean_time = 1.0;
        summary.cells.push_back(cell);
      }
    }
  }
  const auto csvs = emit_plot_data(summary);
  CHECK(count_occurrences(csvs[1].content, "\n") == 33);  // header + 32 rows
}

TEST_CASE("improvement CSV values recompute from the sibling time CSV") {
  BenchConfig cfg;
  cfg.grid_size = 12;
  cfg.densities = {0.1, 0.2};
  cfg.robot_counts = {3};
  cfg.seeds = 3;
  cfg.repetitions = 1;
  cfg.strategies = {Strategy::kFreedom, Strategy::kRandom};
  const Summary summary = summarize(sweep(cfg));
  REQUIRE(summary.comparisons.size() == 2);
  for (const BaselineComparison& c : summary.comparisons) {
    double mean_baseline = 0.0, mean_freedom = 0.0;
    for (const CellSummary& cell : summary.cells) {
      if (cell.density != c.density || cell.robots != c.robots) continue;
      if (cell.strategy == Strategy::kFreedom) mean_freedom = cell.stats.mean_time;
      if (cell.strategy == c.baseline) mean_baseline = cell.stats.mean_time;
    }
    const double expected = 100.0 * (mean_baseline - mean_freedom) / mean_baseline;
    CHECK(c.improvement_pct == doctest::Approx(expected));
  }
}
