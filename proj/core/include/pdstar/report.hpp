#pragma once

#include <string>
#include <vector>

#include "pdstar/bench.hpp"
#include "pdstar/engine.hpp"

namespace pdstar {

struct RenderSpec {
  int cell_px = 20;
  std::vector<std::string> palette;  // empty selects the default palette
  bool show_grid = true;
  bool annotate_steps = false;
};

const std::vector<std::string>& default_palette();

/// Text view of a scenario: '#' obstacle, 'G' goal, robot markers at the
/// starts, '.' free. With a result, trajectory cells carry the robot's marker.
/// At most 36 robots can be drawn; beyond that use render_svg.
std::string render_ascii(const Scenario& scenario, const SimulationResult* result = nullptr);

/// Deterministic standalone SVG: one rect per obstacle, a goal marker, start
/// dots, and one polyline per robot trajectory in palette order.
std::string render_svg(const Scenario& scenario, const SimulationResult* result,
                       const RenderSpec& spec = {});

struct NamedCsv {
  std::string name;
  std::string content;
};

/// Plot-ready aggregates: mean path length per cell and strategy, wall-time
/// means with quartiles, and paired improvement over each baseline.
std::vector<NamedCsv> emit_plot_data(const Summary& summary);

}  // namespace pdstar
