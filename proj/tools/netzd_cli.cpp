// Command-line front end: scenario runs, network generation and measurement,
// and correlation of two-column CSV data.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netzd/netzd.hpp"

namespace fs = std::filesystem;
using namespace netzd;

namespace {

Scenario resolve_scenario(const std::string& what) {
  if (fs::is_regular_file(what)) {
    std::ifstream is(what);
    if (!is) throw Error(Errc::IoError, "cannot read " + what);
    return parse_config(is);
  }
  return preset(what);
}

std::vector<std::pair<std::string, std::string>> split_overrides(const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "--set expects key=value, got '" + kv + "'");
    out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return out;
}

Network load_edges(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(Errc::IoError, "cannot read " + path);
  return read_edge_list(is);
}

void print_measure(const Network& g) {
  const auto stats = degree_stats(g);
  std::cout << std::setprecision(10);
  std::cout << "nodes = " << g.size() << '\n';
  std::cout << "edges = " << g.edge_count() << '\n';
  std::cout << "connected = " << (g.connected() ? "true" : "false") << '\n';
  std::cout << "mean_degree = " << stats.mean_degree << '\n';
  std::cout << "max_degree = " << stats.max_degree << '\n';
  if (g.edge_count() > 0) std::cout << "rho = " << assortativity(g).rho << '\n';
  if (stats.histogram.size() >= 2) {
    try {
      const auto fit = fit_degree_power_law(stats.histogram);
      std::cout << "powerlaw_gamma = " << fit.gamma << '\n';
      std::cout << "powerlaw_r = " << fit.r << '\n';
    } catch (const Error&) {
    }
  }
}

std::vector<std::pair<double, double>> read_xy(const std::string& path, const std::string& x_col,
                                               const std::string& y_col) {
  std::ifstream is(path);
  if (!is) throw Error(Errc::IoError, "cannot read " + path);
  std::vector<std::pair<double, double>> points;
  std::string line;
  std::size_t xi = 0, yi = 1;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      first = false;
      bool numeric = true;
      try {
        for (const auto& c : cells) (void)std::stod(c);
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) {
        auto find = [&](const std::string& name, std::size_t fallback) {
          if (name.empty()) return fallback;
          for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == name) return i;
          throw Error(Errc::ParseError, "column '" + name + "' not found in " + path);
        };
        xi = find(x_col, 0);
        yi = find(y_col, 1);
        continue;
      }
    }
    if (cells.size() <= std::max(xi, yi)) throw Error(Errc::ParseError, "short row in " + path);
    try {
      points.emplace_back(std::stod(cells[xi]), std::stod(cells[yi]));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "non-numeric value in " + path + ": " + line);
    }
  }
  return points;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Memory-one iterated prisoner's dilemma on networks"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list-presets", "List the built-in scenarios");

  std::string show_target;
  bool show_reduced = false;
  auto* show_cmd = app.add_subcommand("show", "Print the fully resolved parameters of a preset or config");
  show_cmd->add_option("scenario", show_target, "Preset name or config file")->required();
  show_cmd->add_flag("--reduced", show_reduced, "Apply the 200-node / 30k-step profile");

  std::string run_target, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replicates, steps, nodes;
  std::size_t parallel = 1;
  bool reduced = false;
  std::vector<std::string> overrides;
  auto* run_cmd = app.add_subcommand("run", "Run a preset or config file");
  run_cmd->add_option("scenario", run_target, "Preset name or config file")->required();
  run_cmd->add_option("--seed", seed, "Base seed");
  run_cmd->add_option("--replicates", replicates, "Replicates per sweep point");
  run_cmd->add_option("--steps", steps, "Time-steps per run");
  run_cmd->add_option("--nodes", nodes, "Population size");
  run_cmd->add_option("--out", out_dir, "Output directory (default out/<scenario name>)");
  run_cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--reduced", reduced, "Apply the 200-node / 30k-step profile before overrides");
  run_cmd->add_option("--set", overrides, "Extra key=value overrides (repeatable)");

  std::string family = "scale_free", net_out, hist_out;
  std::size_t net_nodes = 1000, net_degree = 8, net_attach = 2, max_steps = 2000000;
  std::uint64_t net_seed = 1;
  std::optional<double> target_rho;
  double tol = 0.02;
  auto* netgen_cmd = app.add_subcommand("netgen", "Generate a network and write it as an edge list");
  netgen_cmd->add_option("--family", family, "regular | scale_free")
      ->check(CLI::IsMember({"regular", "scale_free"}));
  netgen_cmd->add_option("--nodes", net_nodes, "Node count");
  netgen_cmd->add_option("--degree", net_degree, "Degree of the regular family");
  netgen_cmd->add_option("--attach", net_attach, "Edges per arriving node (scale_free)");
  netgen_cmd->add_option("--seed", net_seed, "Seed");
  netgen_cmd->add_option("--target-rho", target_rho, "Rewire to this assortativity");
  netgen_cmd->add_option("--tol", tol, "Assortativity tolerance");
  netgen_cmd->add_option("--max-steps", max_steps, "Rewiring attempts");
  netgen_cmd->add_option("--out", net_out, "Edge-list output (default stdout)");
  netgen_cmd->add_option("--hist", hist_out, "Degree histogram CSV output");

  std::string measure_in, measure_hist;
  auto* measure_cmd = app.add_subcommand("measure", "Print statistics of an edge-list file");
  measure_cmd->add_option("edges", measure_in, "Edge-list file")->required();
  measure_cmd->add_option("--hist", measure_hist, "Degree histogram CSV output");

  std::string corr_in, x_col, y_col;
  auto* corr_cmd = app.add_subcommand("correlate", "Pearson correlation of two CSV columns");
  corr_cmd->add_option("csv", corr_in, "CSV file")->required();
  corr_cmd->add_option("--x", x_col, "x column name (default: first column)");
  corr_cmd->add_option("--y", y_col, "y column name (default: second column)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list_cmd) {
      for (const auto& name : preset_names()) std::cout << name << '\n';
    } else if (*show_cmd) {
      Scenario s = resolve_scenario(show_target);
      if (show_reduced) s = reduced_profile(s);
      write_config(std::cout, s);
    } else if (*run_cmd) {
      Scenario s = resolve_scenario(run_target);
      if (reduced) s = reduced_profile(s);
      if (seed) s.base_seed = *seed;
      if (replicates) s.replicates = *replicates;
      if (steps) s.steps = *steps;
      if (nodes) s.network.nodes = *nodes;
      apply_settings(s, split_overrides(overrides));
      const fs::path dir = out_dir.empty() ? fs::path("out") / s.name : fs::path(out_dir);
      const auto output = run_scenario(s, dir, parallel);
      std::cout << std::setprecision(6);
      std::cout << "scenario = " << s.name << '\n' << "output = " << dir.string() << '\n';
      for (const auto& p : output.result.points) {
        std::cout << "point " << p.point << ": rho = " << p.achieved_rho
                  << ", mean final fraction of " << s.strategy_a << " = " << p.mean_final
                  << " (sd " << p.std_final << "), extinct " << p.extinct_a << "/"
                  << p.final_fractions.size() << '\n';
      }
      if (output.result.correlation) std::cout << "correlation = " << *output.result.correlation << '\n';
    } else if (*netgen_cmd) {
      Network g = family == "regular" ? regular_random(net_nodes, net_degree, net_seed)
                                      : barabasi_albert(net_nodes, net_attach, net_seed);
      if (target_rho) g = rewire_to_assortativity(g, *target_rho, tol, max_steps, net_seed).network;
      if (net_out.empty()) {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream os(net_out);
        if (!os) throw Error(Errc::IoError, "cannot write " + net_out);
        write_edge_list(os, g);
        print_measure(g);
      }
      if (!hist_out.empty()) {
        std::ofstream os(hist_out);
        if (!os) throw Error(Errc::IoError, "cannot write " + hist_out);
        write_degree_histogram_csv(os, degree_stats(g));
      }
    } else if (*measure_cmd) {
      const Network g = load_edges(measure_in);
      print_measure(g);
      if (!measure_hist.empty()) {
        std::ofstream os(measure_hist);
        if (!os) throw Error(Errc::IoError, "cannot write " + measure_hist);
        write_degree_histogram_csv(os, degree_stats(g));
      }
    } else if (*corr_cmd) {
      const auto points = read_xy(corr_in, x_col, y_col);
      std::cout << std::setprecision(10) << "correlation = " << correlate(points) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: code=" << errc_name(e.code()) << " message=" << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: code=Internal message=" << e.what() << '\n';
    return 1;
  }
  return 0;
}
