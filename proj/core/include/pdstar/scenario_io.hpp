#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pdstar/engine.hpp"

namespace pdstar {

/// Character rows of the scenario grid: '.' free, '#' obstacle, 'G' goal, and
/// one marker per robot start ('0'-'9' then 'A'-'Z' by robot index). Markers
/// are decoration; parsers take positions from the header or JSON fields.
std::vector<std::string> scenario_rows(const Scenario& scenario);

/// Marker character for a robot index; throws when more than 36 robots are
/// asked for (use the SVG renderer beyond that).
char robot_marker(int robot_index);

/// Plain-text scenario format:
///   line 1: "width height"
///   line 2: "goal_x goal_y"
///   line 3: "n"
///   n lines: "start_x start_y"
///   height rows of width characters ('#' obstacle, anything else free)
std::string write_scenario_text(const Scenario& scenario);
Scenario parse_scenario_text(const std::string& text);

/// JSON equivalent carrying the same fields; both formats parse to identical
/// Scenario values.
std::string write_scenario_json(const Scenario& scenario);
Scenario parse_scenario_json(const std::string& text);

/// Reads either format, picked by the leading character of the file.
Scenario load_scenario_file(const std::filesystem::path& path);
void save_scenario_file(const Scenario& scenario, const std::filesystem::path& path,
                        bool as_json);

struct LoadedResult {
  Scenario scenario;
  SimulationResult result;
  Strategy strategy = Strategy::kFreedom;
};

/// Result document: scenario echo, per-robot trajectories, arrival steps,
/// combined length, wall time and per-step events. schema_version 1.
std::string write_result_json(const SimulationResult& result, const Scenario& scenario,
                              Strategy strategy);
LoadedResult parse_result_json(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pdstar
