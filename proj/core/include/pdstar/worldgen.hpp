#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdstar/engine.hpp"

namespace pdstar {

struct GenConfig {
  int width = 20;
  int height = 20;
  double density = 0.2;  // fraction of cells that become obstacles, in [0, 1)
  int robots = 1;
  std::uint64_t seed = 0;
};

struct GenerationFailedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic scenario generation. The goal sits at the grid center, exactly
/// floor(density * width * height) obstacle cells are drawn uniformly from the
/// non-goal cells, and the robot starts are drawn uniformly from the goal's
/// connected component, so every start is reachable by construction. Obstacle
/// layouts that leave the component too small are redrawn from the same
/// generator stream, up to a retry limit.
Scenario generate(const GenConfig& config);

struct BatchItem {
  bool ok = false;
  Scenario scenario;
  std::string error;
};

/// One item per config; failures are captured per index instead of aborting
/// the batch.
std::vector<BatchItem> batch(const std::vector<GenConfig>& configs);

}  // namespace pdstar
