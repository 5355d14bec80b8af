#include "pdstar/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pdstar {

namespace {

constexpr std::string_view kMarkers = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr int kSchemaVersion = 1;

using nlohmann::json;

json cell_to_json(Cell c) { return json::array({c.x, c.y}); }

Cell cell_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [x, y] pair");
  return Cell{j[0].get<int>(), j[1].get<int>()};
}

Scenario scenario_from_parts(int width, int height, Cell goal, std::vector<Cell> starts,
                             const std::vector<std::string>& rows) {
  if (static_cast<int>(rows.size()) != height) {
    throw std::runtime_error("scenario: expected " + std::to_string(height) + " grid rows");
  }
  std::vector<Cell> obstacles;
  for (int y = 0; y < height; ++y) {
    if (static_cast<int>(rows[y].size()) != width) {
      throw std::runtime_error("scenario: row " + std::to_string(y) + " has wrong width");
    }
    for (int x = 0; x < width; ++x) {
      if (rows[y][x] == '#') obstacles.push_back(Cell{x, y});
    }
  }
  Scenario scenario;
  scenario.world = std::make_shared<GridWorld>(width, height, obstacles);
  scenario.goal = goal;
  scenario.starts = std::move(starts);
  validate_scenario(scenario);
  return scenario;
}

}  // namespace

char robot_marker(int robot_index) {
  if (robot_index < 0 || robot_index >= static_cast<int>(kMarkers.size())) {
    throw std::invalid_argument(
        "more than 36 robots cannot be drawn with text markers; render to SVG instead");
  }
  return kMarkers[robot_index];
}

std::vector<std::string> scenario_rows(const Scenario& scenario) {
  const GridWorld& grid = *scenario.world;
  std::vector<std::string> rows(grid.height(), std::string(grid.width(), '.'));
  for (const Cell c : grid.obstacles()) rows[c.y][c.x] = '#';
  rows[scenario.goal.y][scenario.goal.x] = 'G';
  for (std::size_t i = 0; i < scenario.starts.size(); ++i) {
    const Cell s = scenario.starts[i];
    rows[s.y][s.x] = robot_marker(static_cast<int>(i));
  }
  return rows;
}

std::string write_scenario_text(const Scenario& scenario) {
  std::ostringstream out;
  out << scenario.world->width() << ' ' << scenario.world->height() << '\n';
  out << scenario.goal.x << ' ' << scenario.goal.y << '\n';
  out << scenario.starts.size() << '\n';
  for (const Cell s : scenario.starts) out << s.x << ' ' << s.y << '\n';
  for (const std::string& row : scenario_rows(scenario)) out << row << '\n';
  return out.str();
}

Scenario parse_scenario_text(const std::string& text) {
  std::istringstream in(text);
  int width = 0, height = 0, n = 0;
  Cell goal;
  if (!(in >> width >> height)) throw std::runtime_error("scenario: bad dimension line");
  if (!(in >> goal.x >> goal.y)) throw std::runtime_error("scenario: bad goal line");
  if (!(in >> n) || n < 0) throw std::runtime_error("scenario: bad robot count");
  std::vector<Cell> starts(n);
  for (int i = 0; i < n; ++i) {
    if (!(in >> starts[i].x >> starts[i].y)) {
      throw std::runtime_error("scenario: bad start line " + std::to_string(i));
    }
  }
  std::string line;
  std::getline(in, line);  // finish the last header line
  std::vector<std::string> rows;
  while (static_cast<int>(rows.size()) < height && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  return scenario_from_parts(width, height, goal, std::move(starts), rows);
}

std::string write_scenario_json(const Scenario& scenario) {
  json j;
  j["width"] = scenario.world->width();
  j["height"] = scenario.world->height();
  j["goal"] = cell_to_json(scenario.goal);
  j["n"] = scenario.starts.size();
  json starts = json::array();
  for (const Cell s : scenario.starts) starts.push_back(cell_to_json(s));
  j["starts"] = std::move(starts);
  j["rows"] = scenario_rows(scenario);
  return j.dump(2) + "\n";
}

Scenario parse_scenario_json(const std::string& text) {
  const json j = json::parse(text);
  const int width = j.at("width").get<int>();
  const int height = j.at("height").get<int>();
  const Cell goal = cell_from_json(j.at("goal"));
  std::vector<Cell> starts;
  for (const json& s : j.at("starts")) starts.push_back(cell_from_json(s));
  if (j.contains("n") && j.at("n").get<std::size_t>() != starts.size()) {
    throw std::runtime_error("scenario: n does not match the number of starts");
  }
  const auto rows = j.at("rows").get<std::vector<std::string>>();
  return scenario_from_parts(width, height, goal, std::move(starts), rows);
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_scenario_json(text);
  return parse_scenario_text(text);
}

void save_scenario_file(const Scenario& scenario, const std::filesystem::path& path,
                        bool as_json) {
  write_text_file(path, as_json ? write_scenario_json(scenario)
                                : write_scenario_text(scenario));
}

std::string write_result_json(const SimulationResult& result, const Scenario& scenario,
                              Strategy strategy) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["strategy"] = strategy_name(strategy);
  j["status"] = result.status == RunStatus::kOk ? "ok" : "step_limit";
  j["steps"] = result.steps_run;
  j["combined_path_length"] = result.combined_path_length;
  j["wall_time_s"] = result.wall_time_seconds;
  j["initial_costs"] = result.initial_costs;
  j["arrival_steps"] = result.arrival_steps;

  json scenario_j = json::parse(write_scenario_json(scenario));
  scenario_j["seed"] = scenario.seed;
  j["scenario"] = std::move(scenario_j);

  json trajectories = json::array();
  for (const auto& traj : result.trajectories) {
    json path = json::array();
    for (const Cell c : traj) path.push_back(cell_to_json(c));
    trajectories.push_back(std::move(path));
  }
  j["trajectories"] = std::move(trajectories);

  // Events are stored sparsely; steps without incidents are omitted.
  json events = json::array();
  for (std::size_t t = 0; t < result.step_events.size(); ++t) {
    const StepEvents& e = result.step_events[t];
    if (e.empty()) continue;
    json entry;
    entry["step"] = t;
    entry["rerouted"] = e.rerouted;
    entry["fell_back"] = e.fell_back;
    entry["forced_stay"] = e.forced_stay;
    events.push_back(std::move(entry));
  }
  j["events"] = std::move(events);
  return j.dump(2) + "\n";
}

LoadedResult parse_result_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::runtime_error("result: unsupported schema version");
  }
  LoadedResult loaded;
  loaded.strategy = strategy_from_name(j.at("strategy").get<std::string>());
  loaded.scenario = parse_scenario_json(j.at("scenario").dump());
  if (j.at("scenario").contains("seed")) {
    loaded.scenario.seed = j.at("scenario").at("seed").get<std::uint64_t>();
  }

  SimulationResult& r = loaded.result;
  r.status = j.at("status").get<std::string>() == "ok" ? RunStatus::kOk
                                                       : RunStatus::kStepLimit;
  r.steps_run = j.at("steps").get<int>();
  r.combined_path_length = j.at("combined_path_length").get<long long>();
  r.wall_time_seconds = j.at("wall_time_s").get<double>();
  r.initial_costs = j.at("initial_costs").get<std::vector<double>>();
  r.arrival_steps = j.at("arrival_steps").get<std::vector<int>>();
  for (const json& path : j.at("trajectories")) {
    std::vector<Cell> traj;
    for (const json& c : path) traj.push_back(cell_from_json(c));
    r.trajectories.push_back(std::move(traj));
  }
  r.step_events.assign(r.steps_run, StepEvents{});
  for (const json& entry : j.at("events")) {
    const auto t = entry.at("step").get<std::size_t>();
    if (t >= r.step_events.size()) throw std::runtime_error("result: event past the end");
    r.step_events[t].rerouted = entry.at("rerouted").get<std::vector<int>>();
    r.step_events[t].fell_back = entry.at("fell_back").get<std::vector<int>>();
    r.step_events[t].forced_stay = entry.at("forced_stay").get<std::vector<int>>();
  }
  return loaded;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace pdstar
