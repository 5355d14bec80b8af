#include "pdstar/report.hpp"

#include <cstdio>
#include <sstream>

#include "pdstar/scenario_io.hpp"

namespace pdstar {

namespace {

std::string format_double(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string format_density(double d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

// Pixel coordinate of a cell center; prints without trailing zeros.
std::string px(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> palette{
      "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
      "#46f0f0", "#f032e6", "#9a6324", "#008080", "#808000",
  };
  return palette;
}

std::string render_ascii(const Scenario& scenario, const SimulationResult* result) {
  std::vector<std::string> rows = scenario_rows(scenario);
  if (result) {
    for (std::size_t i = 0; i < result->trajectories.size(); ++i) {
      const char marker = robot_marker(static_cast<int>(i));
      for (const Cell c : result->trajectories[i]) {
        char& ch = rows[c.y][c.x];
        if (ch == '.') ch = marker;
      }
    }
  }
  std::string out;
  for (const std::string& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Scenario& scenario, const SimulationResult* result,
                       const RenderSpec& spec) {
  if (spec.cell_px < 1) throw std::invalid_argument("render_svg: cell_px must be >= 1");
  const std::vector<std::string>& palette =
      spec.palette.empty() ? default_palette() : spec.palette;
  const GridWorld& grid = *scenario.world;
  const int s = spec.cell_px;
  const int w = grid.width() * s;
  const int h = grid.height() * s;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  out << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

  if (spec.show_grid) {
    out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int x = 0; x <= grid.width(); ++x) {
      out << "    <line x1=\"" << x * s << "\" y1=\"0\" x2=\"" << x * s << "\" y2=\"" << h
          << "\"/>\n";
    }
    for (int y = 0; y <= grid.height(); ++y) {
      out << "    <line x1=\"0\" y1=\"" << y * s << "\" x2=\"" << w << "\" y2=\"" << y * s
          << "\"/>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g fill=\"#333333\">\n";
  for (const Cell c : scenario.world->obstacles()) {
    out << "    <rect x=\"" << c.x * s << "\" y=\"" << c.y * s << "\" width=\"" << s
        << "\" height=\"" << s << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <rect x=\"" << scenario.goal.x * s << "\" y=\"" << scenario.goal.y * s
      << "\" width=\"" << s << "\" height=\"" << s << "\" fill=\"#2e8b57\"/>\n";

  if (result) {
    for (std::size_t i = 0; i < result->trajectories.size(); ++i) {
      const std::string& color = palette[i % palette.size()];
      const auto& traj = result->trajectories[i];
      out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
          << px(s / 4.0) << "\" points=\"";
      for (std::size_t t = 0; t < traj.size(); ++t) {
        if (t) out << ' ';
        out << px((traj[t].x + 0.5) * s) << ',' << px((traj[t].y + 0.5) * s);
      }
      out << "\"/>\n";
      if (spec.annotate_steps) {
        out << "  <g font-size=\"" << px(s / 2.5) << "\" fill=\"" << color << "\">\n";
        for (std::size_t t = 0; t < traj.size(); ++t) {
          out << "    <text x=\"" << px((traj[t].x + 0.1) * s) << "\" y=\""
              << px((traj[t].y + 0.4) * s) << "\">" << t << "</text>\n";
        }
        out << "  </g>\n";
      }
    }
  }

  for (std::size_t i = 0; i < scenario.starts.size(); ++i) {
    const std::string& color = palette[i % palette.size()];
    const Cell c = scenario.starts[i];
    out << "  <circle cx=\"" << px((c.x + 0.5) * s) << "\" cy=\"" << px((c.y + 0.5) * s)
        << "\" r=\"" << px(s / 3.0) << "\" fill=\"" << color << "\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

std::vector<NamedCsv> emit_plot_data(const Summary& summary) {
  std::ostringstream lengths;
  lengths << "density,robots,strategy,mean_path_length\n";
  for (const CellSummary& c : summary.cells) {
    lengths << format_density(c.density) << ',' << c.robots << ','
            << strategy_name(c.strategy) << ',' << format_double(c.stats.mean_path)
            << '\n';
  }

  std::ostringstream times;
  times << "density,robots,strategy,mean_wall_time_s,q1_wall_time_s,median_wall_time_s,"
           "q3_wall_time_s\n";
  for (const CellSummary& c : summary.cells) {
    times << format_density(c.density) << ',' << c.robots << ','
          << strategy_name(c.strategy) << ',' << format_double(c.stats.mean_time, 9) << ','
          << format_double(c.stats.q1_time, 9) << ','
          << format_double(c.stats.median_time, 9) << ','
          << format_double(c.stats.q3_time, 9) << '\n';
  }

  std::ostringstream improvement;
  improvement << "density,robots,baseline,mean_wall_time_baseline_s,"
                 "mean_wall_time_freedom_s,improvement_pct,win_rate\n";
  for (const BaselineComparison& c : summary.comparisons) {
    improvement << format_density(c.density) << ',' << c.robots << ','
                << strategy_name(c.baseline) << ','
                << format_double(c.mean_time_baseline, 9) << ','
                << format_double(c.mean_time_freedom, 9) << ','
                << format_double(c.improvement_pct) << ',' << format_double(c.win_rate)
                << '\n';
  }

  return {
      {"plot_path_length.csv", lengths.str()},
      {"plot_wall_time.csv", times.str()},
      {"plot_improvement.csv", improvement.str()},
  };
}

}  // namespace pdstar
