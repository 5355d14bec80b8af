// pdstar: generate scenarios, plan multi-robot runs, sweep benchmarks and
// render results.
//
// Exit codes: 0 success, 1 usage or missing input, 2 generation failed,
// 3 no initial path, 4 step limit exceeded, 5 every benchmark run failed.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdstar/bench.hpp"
#include "pdstar/report.hpp"
#include "pdstar/scenario_io.hpp"
#include "pdstar/worldgen.hpp"

namespace fs = std::filesystem;
using namespace pdstar;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitGenerationFailed = 2;
constexpr int kExitNoInitialPath = 3;
constexpr int kExitStepLimit = 4;
constexpr int kExitAllRunsFailed = 5;

std::string default_out_dir() {
  if (const char* env = std::getenv("PDSTAR_OUT")) return env;
  return ".";
}

const std::vector<std::string> kStrategyNames{"freedom", "farthest", "random", "hillclimb"};

struct GenerateArgs {
  int size = 20;
  double density = 0.2;
  int robots = 5;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out = default_out_dir();
  std::string format = "text";
};

int cmd_generate(const GenerateArgs& args) {
  std::vector<GenConfig> cfgs;
  for (int i = 0; i < args.count; ++i) {
    GenConfig cfg;
    cfg.width = cfg.height = args.size;
    cfg.density = args.density;
    cfg.robots = args.robots;
    cfg.seed = args.seed + static_cast<std::uint64_t>(i);
    cfgs.push_back(cfg);
  }
  const auto items = batch(cfgs);
  bool any_failed = false;
  const bool as_json = args.format == "json";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].ok) {
      std::cerr << "generation failed for seed " << cfgs[i].seed << ": "
                << items[i].error << "\n";
      any_failed = true;
      continue;
    }
    const fs::path path = fs::path(args.out) /
                          ("scenario_s" + std::to_string(cfgs[i].seed) +
                           (as_json ? ".json" : ".txt"));
    save_scenario_file(items[i].scenario, path, as_json);
    std::cout << path.string() << "\n";
  }
  return any_failed ? kExitGenerationFailed : 0;
}

struct PlanArgs {
  std::string scenario_path;
  std::string strategy = "freedom";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  int max_steps = 0;
  bool forbid_swaps = false;
  int hillclimb_budget = 0;
};

int cmd_plan(const PlanArgs& args) {
  Scenario scenario = load_scenario_file(args.scenario_path);
  if (args.seed_given) scenario.seed = args.seed;

  RunConfig config;
  config.max_steps = args.max_steps;
  config.forbid_swaps = args.forbid_swaps;
  config.hillclimb_budget = args.hillclimb_budget;
  const Strategy strategy = strategy_from_name(args.strategy);

  SimulationResult result;
  try {
    result = run(scenario, strategy, config);
  } catch (const NoInitialPathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInitialPath;
  }

  const fs::path out = args.out.empty()
                           ? fs::path(default_out_dir()) / "result.json"
                           : fs::path(args.out);
  write_text_file(out, write_result_json(result, scenario, strategy));

  std::printf("combined_path_length=%lld steps=%d wall_time_s=%.6f reroutes=%d "
              "fallbacks=%d forced_stays=%d\n",
              result.combined_path_length, result.steps_run, result.wall_time_seconds,
              result.total_reroutes(), result.total_fallbacks(),
              result.total_forced_stays());
  std::cout << out.string() << "\n";

  if (result.status == RunStatus::kStepLimit) {
    std::cerr << "error: step limit exceeded, result is partial\n";
    return kExitStepLimit;
  }
  return 0;
}

struct BenchArgs {
  int size = 20;
  std::vector<double> densities{0.1, 0.2, 0.3, 0.4};
  std::vector<int> robots{5, 10};
  int seeds = 25;
  std::uint64_t base_seed = 1;
  std::vector<std::string> strategies = kStrategyNames;
  int repetitions = 3;
  int jobs = 1;
  int max_steps = 0;
  bool forbid_swaps = false;
  int hillclimb_budget = 0;
  std::string out = default_out_dir();
};

int cmd_bench(const BenchArgs& args) {
  BenchConfig cfg;
  cfg.grid_size = args.size;
  cfg.densities = args.densities;
  cfg.robot_counts = args.robots;
  cfg.seeds = args.seeds;
  cfg.base_seed = args.base_seed;
  cfg.strategies.clear();
  for (const std::string& name : args.strategies) {
    cfg.strategies.push_back(strategy_from_name(name));
  }
  cfg.repetitions = args.repetitions;
  cfg.jobs = args.jobs;
  cfg.max_steps = args.max_steps;
  cfg.forbid_swaps = args.forbid_swaps;
  cfg.hillclimb_budget = args.hillclimb_budget;

  const auto records = sweep(cfg);
  const Summary summary = summarize(records);

  const fs::path out(args.out);
  write_text_file(out / "records.csv", records_to_csv(records));
  write_text_file(out / "summary.csv", summary_to_csv(summary));
  for (const NamedCsv& csv : emit_plot_data(summary)) {
    write_text_file(out / csv.name, csv.content);
  }
  std::cout << summary_to_table(summary);
  std::cout << "wrote " << (out / "records.csv").string() << "\n";

  bool any_ok = false;
  for (const BenchRecord& r : records) any_ok |= r.status == RecordStatus::kOk;
  return records.empty() || any_ok ? 0 : kExitAllRunsFailed;
}

struct RenderArgs {
  std::string scenario_path;
  std::string result_path;
  std::string out;
  bool ascii = false;
  int cell_px = 20;
  bool no_grid = false;
  bool annotate_steps = false;
};

int cmd_render(const RenderArgs& args) {
  Scenario scenario = load_scenario_file(args.scenario_path);
  SimulationResult result;
  const SimulationResult* result_ptr = nullptr;
  if (!args.result_path.empty()) {
    const LoadedResult loaded = parse_result_json(read_text_file(args.result_path));
    scenario = loaded.scenario;
    result = loaded.result;
    result_ptr = &result;
  }

  std::string rendered;
  if (args.ascii) {
    rendered = render_ascii(scenario, result_ptr);
  } else {
    RenderSpec spec;
    spec.cell_px = args.cell_px;
    spec.show_grid = !args.no_grid;
    spec.annotate_steps = args.annotate_steps;
    rendered = render_svg(scenario, result_ptr, spec);
  }

  if (args.out.empty()) {
    std::cout << rendered;
  } else {
    write_text_file(args.out, rendered);
    std::cout << args.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-robot grid path planning with incremental search and "
               "dynamic freedom-index priorities"};
  app.require_subcommand(1);

  const auto density_check = CLI::Validator(
      [](std::string& value) -> std::string {
        const double d = std::stod(value);
        if (d < 0.0 || d >= 1.0) return "density must be in [0, 1)";
        return {};
      },
      "DENSITY");

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "write random scenario files");
  generate->add_option("--size", gen.size, "grid side length in cells")
      ->check(CLI::PositiveNumber);
  generate->add_option("--density", gen.density, "obstacle fraction in [0, 1)")
      ->check(density_check);
  generate->add_option("--robots", gen.robots, "number of robots")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", gen.seed, "generator seed");
  generate->add_option("--count", gen.count, "number of scenarios (seeds seed..seed+count-1)")
      ->check(CLI::PositiveNumber);
  generate->add_option("--out", gen.out, "output directory (default $PDSTAR_OUT or .)");
  generate->add_option("--format", gen.format, "file format")
      ->check(CLI::IsMember({"text", "json"}));

  PlanArgs plan;
  CLI::App* plan_cmd = app.add_subcommand("plan", "run one scenario and write the result");
  plan_cmd->add_option("--scenario", plan.scenario_path, "scenario file")->required();
  plan_cmd->add_option("--strategy", plan.strategy, "priority strategy")
      ->check(CLI::IsMember(kStrategyNames));
  auto* plan_seed = plan_cmd->add_option("--seed", plan.seed,
                                         "seed for random/hillclimb orders");
  plan_cmd->add_option("--out", plan.out, "result file (default <out dir>/result.json)");
  plan_cmd->add_option("--max-steps", plan.max_steps,
                       "step limit (default 10*(width+height))");
  plan_cmd->add_flag("--forbid-swaps", plan.forbid_swaps,
                     "treat position swaps as conflicts");
  plan_cmd->add_option("--hillclimb-budget", plan.hillclimb_budget,
                       "swap proposals for hillclimb (default 5*robots)");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "sweep the benchmark protocol");
  bench_cmd->add_option("--size", bench.size, "grid side length")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--densities", bench.densities, "obstacle fractions")
      ->delimiter(',')
      ->check(density_check);
  bench_cmd->add_option("--robots", bench.robots, "robot counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seeds", bench.seeds, "scenarios per sweep cell")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--base-seed", bench.base_seed, "first scenario seed");
  bench_cmd->add_option("--strategies", bench.strategies, "strategies to run")
      ->delimiter(',')
      ->check(CLI::IsMember(kStrategyNames));
  bench_cmd->add_option("--repetitions", bench.repetitions,
                        "timed executions per record (median is kept)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads across scenario cells")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-steps", bench.max_steps, "step limit per run");
  bench_cmd->add_flag("--forbid-swaps", bench.forbid_swaps,
                      "treat position swaps as conflicts");
  bench_cmd->add_option("--hillclimb-budget", bench.hillclimb_budget,
                        "swap proposals for hillclimb");
  bench_cmd->add_option("--out", bench.out, "output directory");

  RenderArgs render;
  CLI::App* render_cmd = app.add_subcommand("render", "render a scenario or result");
  render_cmd->add_option("--scenario", render.scenario_path, "scenario file")->required();
  render_cmd->add_option("--result", render.result_path, "result file to overlay");
  render_cmd->add_option("--out", render.out, "output file (default stdout)");
  render_cmd->add_flag("--ascii", render.ascii, "text output instead of SVG");
  render_cmd->add_option("--cell-size", render.cell_px, "pixels per cell")
      ->check(CLI::PositiveNumber);
  render_cmd->add_flag("--no-grid", render.no_grid, "omit SVG grid lines");
  render_cmd->add_flag("--annotate-steps", render.annotate_steps,
                       "label trajectory points with step numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (plan_cmd->parsed()) {
      plan.seed_given = plan_seed->count() > 0;
      return cmd_plan(plan);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench);
    if (render_cmd->parsed()) return cmd_render(render);
  } catch (const GenerationFailedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGenerationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
