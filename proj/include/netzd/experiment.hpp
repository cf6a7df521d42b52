#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "netzd/engine.hpp"
#include "netzd/error.hpp"
#include "netzd/evolve.hpp"
#include "netzd/graph.hpp"
#include "netzd/markov.hpp"
#include "netzd/strategy.hpp"

namespace netzd {

// ---------------------------------------------------------------------------
// Statistics

/// Pearson correlation coefficient.
inline double correlate(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw Error(Errc::DegenerateInput, "correlate needs at least two points");
  const double n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx <= 0 || syy <= 0) throw Error(Errc::DegenerateInput, "correlate: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// ---------------------------------------------------------------------------
// Scenario

enum class NetworkFamily { Regular, ScaleFree };
enum class InitKind { Random, Hubs };

struct NetworkSpec {
  NetworkFamily family = NetworkFamily::Regular;
  std::size_t nodes = 1000;
  std::size_t degree = 8;  // regular family
  std::size_t attach = 2;  // scale-free family: edges per arriving node
  std::vector<double> target_rho;  // non-empty: one rewired network per target
  double rho_tol = 0.02;
  std::size_t rewire_max_steps = 2000000;
};

struct Scenario {
  std::string name = "custom";
  NetworkSpec network;
  std::string strategy_a = "zd_default";
  std::string strategy_b = "pavlov";
  InitKind init = InitKind::Random;
  /// Random init: fraction of strategy a. Hubs init: the top fraction of
  /// nodes by degree get strategy a.
  double fraction = 0.6;
  Process process = Process::Moran;
  std::size_t steps = 150000;
  std::size_t replicates = 20;
  std::uint64_t base_seed = 1;
  std::size_t sample_interval = 100;
  double replacement_rate = 0.001;
  bool reset_on_adopt = false;
  PayoffMatrix payoffs;
};

inline std::string_view family_name(NetworkFamily f) {
  return f == NetworkFamily::Regular ? "regular" : "scale_free";
}
inline std::string_view init_name(InitKind k) { return k == InitKind::Random ? "random" : "hubs"; }

namespace detail {

inline Scenario base_preset(std::string name, NetworkFamily family, Process process, InitKind init) {
  Scenario s;
  s.name = std::move(name);
  s.network.family = family;
  s.process = process;
  s.init = init;
  return s;
}

inline std::map<std::string, Scenario, std::less<>> build_presets() {
  using NF = NetworkFamily;
  using P = Process;
  using I = InitKind;
  std::map<std::string, Scenario, std::less<>> out;
  auto add = [&](Scenario s) { out.emplace(s.name, std::move(s)); };

  add(base_preset("fig1_wellmixed_moran", NF::Regular, P::Moran, I::Random));
  {
    auto s = base_preset("fig1_wellmixed_moran_f04", NF::Regular, P::Moran, I::Random);
    s.fraction = 0.4;
    add(s);
  }
  add(base_preset("fig2_sf_moran", NF::ScaleFree, P::Moran, I::Random));
  add(base_preset("fig2_sf_moran_hubs", NF::ScaleFree, P::Moran, I::Hubs));
  add(base_preset("fig3_wellmixed_adoption", NF::Regular, P::Adoption, I::Random));
  {
    auto s = base_preset("fig3_wellmixed_adoption_f04", NF::Regular, P::Adoption, I::Random);
    s.fraction = 0.4;
    add(s);
  }
  add(base_preset("fig4a_sf_adoption_random", NF::ScaleFree, P::Adoption, I::Random));
  add(base_preset("fig4b_sf_adoption_hubs", NF::ScaleFree, P::Adoption, I::Hubs));
  {
    auto s = base_preset("fig4b_sf_adoption_pavlov_hubs", NF::ScaleFree, P::Adoption, I::Hubs);
    s.strategy_a = "pavlov";
    s.strategy_b = "zd_default";
    add(s);
  }
  const std::array<std::pair<const char*, const char*>, 4> rivals = {{{"fig5_gc", "general_cooperator"},
                                                                      {"fig5_coop", "cooperator"},
                                                                      {"fig6_defector", "defector"},
                                                                      {"fig6_tft", "tit_for_tat"}}};
  for (const auto& [name, strat] : rivals) {
    auto s = base_preset(name, NF::ScaleFree, P::Adoption, I::Random);
    s.strategy_a = strat;
    add(s);
    auto h = base_preset(std::string(name) + "_hubs", NF::ScaleFree, P::Adoption, I::Hubs);
    h.strategy_a = strat;
    add(h);
  }
  {
    auto s = base_preset("fig7_assortativity_sweep", NF::ScaleFree, P::Adoption, I::Random);
    // Evenly spaced grid over the range BA(m = 2) networks reach by rewiring
    // at both 200 and 1000 nodes; with seed 1 the 200-node base network tops
    // out near rho = 0.18, so the sweep uses seed 2.
    s.network.target_rho = {-0.25, -0.15, -0.05, 0.05, 0.15, 0.25};
    s.replicates = 40;
    s.base_seed = 2;
    add(s);
  }
  return out;
}

inline const std::map<std::string, Scenario, std::less<>>& presets() {
  static const auto table = build_presets();
  return table;
}

}  // namespace detail

inline std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : detail::presets()) names.push_back(name);
  return names;
}

inline Scenario preset(std::string_view name) {
  const auto& table = detail::presets();
  if (auto it = table.find(name); it != table.end()) return it->second;
  throw Error(Errc::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

/// Desk-scale variant used for quick checks: 200 nodes, 30k steps.
inline Scenario reduced_profile(Scenario s) {
  s.network.nodes = 200;
  s.steps = 30000;
  return s;
}

// ---------------------------------------------------------------------------
// Config files: "key = value" lines, '#' comments.

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "config key '" + key + "': expected a number, got '" + value + "'");
  }
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    if (value.empty() || value[0] == '-') throw std::invalid_argument(value);
    std::size_t used = 0;
    const auto v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError,
                "config key '" + key + "': expected a non-negative integer, got '" + value + "'");
  }
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(Errc::ParseError, "config key '" + key + "': expected true/false, got '" + value + "'");
}

}  // namespace detail

/// Applies one key = value setting. Keys mirror Scenario fields; payoff keys
/// go through apply_settings.
inline void apply_setting(Scenario& s, const std::string& key, const std::string& value) {
  using namespace detail;
  if (key == "preset") {
    s = preset(value);
  } else if (key == "name") {
    s.name = value;
  } else if (key == "network") {
    if (value == "regular") s.network.family = NetworkFamily::Regular;
    else if (value == "scale_free") s.network.family = NetworkFamily::ScaleFree;
    else throw Error(Errc::ParseError, "network must be 'regular' or 'scale_free'");
  } else if (key == "nodes") {
    s.network.nodes = parse_uint(key, value);
  } else if (key == "degree") {
    s.network.degree = parse_uint(key, value);
  } else if (key == "attach") {
    s.network.attach = parse_uint(key, value);
  } else if (key == "target_rho") {
    s.network.target_rho.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) s.network.target_rho.push_back(parse_double(key, item));
    }
  } else if (key == "rho_tol") {
    s.network.rho_tol = parse_double(key, value);
  } else if (key == "rewire_max_steps") {
    s.network.rewire_max_steps = parse_uint(key, value);
  } else if (key == "strategy_a") {
    named_strategy(value);
    s.strategy_a = value;
  } else if (key == "strategy_b") {
    named_strategy(value);
    s.strategy_b = value;
  } else if (key == "init") {
    if (value == "random") s.init = InitKind::Random;
    else if (value == "hubs") s.init = InitKind::Hubs;
    else throw Error(Errc::ParseError, "init must be 'random' or 'hubs'");
  } else if (key == "fraction") {
    s.fraction = parse_double(key, value);
  } else if (key == "process") {
    if (value == "moran") s.process = Process::Moran;
    else if (value == "adoption") s.process = Process::Adoption;
    else throw Error(Errc::ParseError, "process must be 'moran' or 'adoption'");
  } else if (key == "steps") {
    s.steps = parse_uint(key, value);
  } else if (key == "replicates") {
    s.replicates = parse_uint(key, value);
  } else if (key == "seed") {
    s.base_seed = parse_uint(key, value);
  } else if (key == "sample_interval") {
    s.sample_interval = parse_uint(key, value);
  } else if (key == "replacement_rate") {
    s.replacement_rate = parse_double(key, value);
  } else if (key == "reset_on_adopt") {
    s.reset_on_adopt = parse_bool(key, value);
  } else {
    throw Error(Errc::ParseError, "unknown config key '" + key + "'");
  }
}

/// Applies a batch of settings in order. Payoff keys (payoff_t, payoff_r,
/// payoff_p, payoff_s) are collected and validated together at the end, since
/// T > R > P > S only has to hold for the final matrix.
inline void apply_settings(Scenario& s, const std::vector<std::pair<std::string, std::string>>& settings) {
  std::array<double, 4> raw = {s.payoffs.t(), s.payoffs.r(), s.payoffs.p(), s.payoffs.s()};
  bool payoffs_touched = false;
  const std::array<std::string_view, 4> payoff_keys = {"payoff_t", "payoff_r", "payoff_p", "payoff_s"};
  for (const auto& [key, value] : settings) {
    const auto it = std::find(payoff_keys.begin(), payoff_keys.end(), key);
    if (it != payoff_keys.end()) {
      raw[static_cast<std::size_t>(it - payoff_keys.begin())] = detail::parse_double(key, value);
      payoffs_touched = true;
      continue;
    }
    apply_setting(s, key, value);
    if (key == "preset") {
      raw = {s.payoffs.t(), s.payoffs.r(), s.payoffs.p(), s.payoffs.s()};
    }
  }
  if (payoffs_touched) s.payoffs = PayoffMatrix(raw[0], raw[1], raw[2], raw[3]);
}

/// Parses a config file on top of `base`. A "preset = name" line replaces
/// everything set before it, so it belongs first. Keys prefixed "measured."
/// or "derived." (written into meta.txt) are ignored, so a meta file is
/// itself a valid config.
inline Scenario parse_config(std::istream& is, Scenario base = Scenario{}) {
  std::vector<std::pair<std::string, std::string>> settings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::ParseError, "config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = detail::trim(body.substr(0, eq));
    if (key.starts_with("measured.") || key.starts_with("derived.")) continue;
    settings.emplace_back(std::move(key), detail::trim(body.substr(eq + 1)));
  }
  apply_settings(base, settings);
  return base;
}

/// Writes every Scenario field, so the output round-trips through parse_config.
inline void write_config(std::ostream& os, const Scenario& s) {
  using detail::format_double;
  os << "name = " << s.name << '\n';
  os << "network = " << family_name(s.network.family) << '\n';
  os << "nodes = " << s.network.nodes << '\n';
  os << "degree = " << s.network.degree << '\n';
  os << "attach = " << s.network.attach << '\n';
  os << "target_rho = ";
  for (std::size_t i = 0; i < s.network.target_rho.size(); ++i)
    os << (i ? "," : "") << format_double(s.network.target_rho[i]);
  os << '\n';
  os << "rho_tol = " << format_double(s.network.rho_tol) << '\n';
  os << "rewire_max_steps = " << s.network.rewire_max_steps << '\n';
  os << "strategy_a = " << s.strategy_a << '\n';
  os << "strategy_b = " << s.strategy_b << '\n';
  os << "init = " << init_name(s.init) << '\n';
  os << "fraction = " << format_double(s.fraction) << '\n';
  os << "process = " << process_name(s.process) << '\n';
  os << "steps = " << s.steps << '\n';
  os << "replicates = " << s.replicates << '\n';
  os << "seed = " << s.base_seed << '\n';
  os << "sample_interval = " << s.sample_interval << '\n';
  os << "replacement_rate = " << format_double(s.replacement_rate) << '\n';
  os << "reset_on_adopt = " << (s.reset_on_adopt ? "true" : "false") << '\n';
  os << "payoff_t = " << format_double(s.payoffs.t()) << '\n';
  os << "payoff_r = " << format_double(s.payoffs.r()) << '\n';
  os << "payoff_p = " << format_double(s.payoffs.p()) << '\n';
  os << "payoff_s = " << format_double(s.payoffs.s()) << '\n';
}

inline void validate(const Scenario& s) {
  auto fail = [&](const std::string& what) {
    throw Error(Errc::InvalidParameter, "scenario '" + s.name + "': " + what);
  };
  if (s.steps < 1) fail("steps must be >= 1");
  if (s.replicates < 1) fail("replicates must be >= 1");
  if (s.sample_interval < 1) fail("sample_interval must be >= 1");
  if (!(s.fraction >= 0.0 && s.fraction <= 1.0)) fail("fraction must lie in [0,1]");
  if (!(s.replacement_rate > 0.0 && s.replacement_rate <= 1.0)) fail("replacement_rate must lie in (0,1]");
  if (!(s.network.rho_tol >= 0.0)) fail("rho_tol must be >= 0");
  for (double r : s.network.target_rho)
    if (!(r >= -1.0 && r <= 1.0)) fail("target_rho values must lie in [-1,1]");
  named_strategy(s.strategy_a);
  named_strategy(s.strategy_b);
}

// ---------------------------------------------------------------------------
// Networks for a scenario

struct SweepPoint {
  std::optional<double> target_rho;
  Network network;
  double achieved_rho = 0.0;
};

inline Network build_base_network(const Scenario& s) {
  const auto& spec = s.network;
  if (spec.family == NetworkFamily::Regular) return regular_random(spec.nodes, spec.degree, s.base_seed);
  return barabasi_albert(spec.nodes, spec.attach, s.base_seed);
}

inline double rho_or_zero(const Network& g) {
  return g.edge_count() ? assortativity(g).rho : 0.0;
}

/// One network per sweep point: the base network itself when no target is
/// set, otherwise the base network rewired to each target.
inline std::vector<SweepPoint> prepare_points(const Scenario& s, const Network& base) {
  std::vector<SweepPoint> points;
  if (s.network.target_rho.empty()) {
    points.push_back({std::nullopt, base, rho_or_zero(base)});
    return points;
  }
  for (std::size_t i = 0; i < s.network.target_rho.size(); ++i) {
    const double target = s.network.target_rho[i];
    try {
      auto res = rewire_to_assortativity(base, target, s.network.rho_tol, s.network.rewire_max_steps,
                                         s.base_seed + 7919 * (i + 1));
      points.push_back({target, std::move(res.network), res.rho});
    } catch (const Error& e) {
      throw Error(e.code(), "scenario '" + s.name + "', sweep point " + std::to_string(i) + ": " + e.what());
    }
  }
  return points;
}

inline std::uint64_t replicate_seed(const Scenario& s, std::size_t replicate) {
  return s.base_seed + replicate;
}

/// Builds the initial population of one replicate on the given network.
inline Population initial_population(const Scenario& s, const Network& net, std::size_t point,
                                     std::size_t replicate) {
  const auto a = named_strategy(s.strategy_a);
  const auto b = named_strategy(s.strategy_b);
  const std::uint64_t seed = make_rng(replicate_seed(s, replicate), {point, 0x706f70ULL})();
  if (s.init == InitKind::Random) return init_random(net, a, b, s.fraction, seed);
  return init_hubs(net, a, b, s.fraction, seed);
}

inline EvolutionConfig evolution_config(const Scenario& s) {
  EvolutionConfig cfg;
  cfg.process = s.process;
  cfg.moran.replacement_rate = s.replacement_rate;
  cfg.adoption = make_adoption_config(named_strategy(s.strategy_a), named_strategy(s.strategy_b), s.payoffs);
  cfg.adoption.reset_on_adopt = s.reset_on_adopt;
  cfg.sample_interval = s.sample_interval;
  return cfg;
}

/// Runs a single replicate in memory. run_id = point * replicates + replicate.
inline RunRecord run_replicate(const Scenario& s, const Network& net, std::size_t point,
                               std::size_t replicate) {
  Population pop = initial_population(s, net, point, replicate);
  const std::uint64_t seed = make_rng(replicate_seed(s, replicate), {point, 0x64796eULL})();
  return run(pop, evolution_config(s), s.steps, s.payoffs, seed, point * s.replicates + replicate);
}

// ---------------------------------------------------------------------------
// Results

struct PointSummary {
  std::size_t point = 0;
  std::optional<double> target_rho;
  double achieved_rho = 0.0;
  std::vector<double> final_fractions;  // fraction of strategy a, per replicate
  double mean_final = 0.0;
  double std_final = 0.0;
  std::size_t extinct_a = 0;
  std::size_t extinct_b = 0;
  double class_mean_degree_a = 0.0;  // averaged over replicates, at initialisation
  double class_mean_degree_b = 0.0;
};

struct SweepResult {
  std::vector<PointSummary> points;
  /// Pearson correlation of (achieved rho, mean final fraction of a) when the
  /// scenario has at least two distinct achieved rho values.
  std::optional<double> correlation;
};

/// Reads a RunRecord CSV as written by write_run_csv.
inline RunRecord read_run_csv(std::istream& is) {
  RunRecord rec;
  std::string line;
  if (!std::getline(is, line) || line.rfind("run_id,", 0) != 0) {
    throw Error(Errc::ParseError, "run csv: missing header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw Error(Errc::ParseError, "run csv: expected 6 columns");
    rec.run_id = std::stoull(cells[0]);
    Sample s;
    s.step = std::stoull(cells[1]);
    s.fraction_a = std::stod(cells[2]);
    s.fraction_b = std::stod(cells[3]);
    s.mean_payoff_a = std::stod(cells[4]);
    s.mean_payoff_b = std::stod(cells[5]);
    rec.samples.push_back(s);
  }
  if (!rec.samples.empty()) rec.steps = rec.samples.back().step;
  return rec;
}

namespace detail {

inline std::string run_file_name(std::size_t run_id) {
  std::ostringstream os;
  os << "run_" << std::setw(5) << std::setfill('0') << run_id << ".csv";
  return os.str();
}

inline std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw Error(Errc::IoError, "cannot write " + p.string());
  return os;
}

inline std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream is(p);
  if (!is) throw Error(Errc::IoError, "cannot read " + p.string());
  return is;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline void summarize(PointSummary& p) {
  const double n = static_cast<double>(p.final_fractions.size());
  if (p.final_fractions.empty()) return;
  double sum = 0;
  for (double f : p.final_fractions) sum += f;
  p.mean_final = sum / n;
  double ss = 0;
  for (double f : p.final_fractions) ss += (f - p.mean_final) * (f - p.mean_final);
  p.std_final = p.final_fractions.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  p.extinct_a = static_cast<std::size_t>(
      std::count_if(p.final_fractions.begin(), p.final_fractions.end(), [](double f) { return f == 0.0; }));
  p.extinct_b = static_cast<std::size_t>(
      std::count_if(p.final_fractions.begin(), p.final_fractions.end(), [](double f) { return f == 1.0; }));
}

inline void add_correlation(SweepResult& r) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : r.points) xy.emplace_back(p.achieved_rho, p.mean_final);
  std::vector<double> xs;
  for (const auto& [x, _] : xy) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  if (std::unique(xs.begin(), xs.end()) - xs.begin() < 2) return;
  try {
    r.correlation = correlate(xy);
  } catch (const Error&) {
    r.correlation.reset();  // flat outcome series: correlation undefined
  }
}

}  // namespace detail

/// Reduces the per-run files of an output directory (runs/index.csv and
/// runs/run_*.csv) into per-point summaries.
inline SweepResult aggregate(const std::filesystem::path& dir) {
  auto index = detail::open_in(dir / "runs" / "index.csv");
  std::string line;
  std::getline(index, line);  // header
  std::map<std::size_t, PointSummary> points;
  std::map<std::size_t, std::size_t> counts;
  while (std::getline(index, line)) {
    if (line.empty()) continue;
    const auto c = detail::split_csv(line);
    if (c.size() != 9) throw Error(Errc::ParseError, "runs/index.csv: expected 9 columns");
    const std::size_t run_id = std::stoull(c[0]);
    const std::size_t point = std::stoull(c[1]);
    auto& p = points[point];
    p.point = point;
    if (!c[4].empty()) p.target_rho = std::stod(c[4]);
    p.achieved_rho = std::stod(c[5]);
    p.class_mean_degree_a += std::stod(c[6]);
    p.class_mean_degree_b += std::stod(c[7]);
    ++counts[point];
    auto run_in = detail::open_in(dir / "runs" / detail::run_file_name(run_id));
    const RunRecord rec = read_run_csv(run_in);
    p.final_fractions.push_back(rec.final_fraction_a());
  }
  SweepResult result;
  for (auto& [idx, p] : points) {
    p.class_mean_degree_a /= static_cast<double>(counts[idx]);
    p.class_mean_degree_b /= static_cast<double>(counts[idx]);
    detail::summarize(p);
    result.points.push_back(std::move(p));
  }
  detail::add_correlation(result);
  return result;
}

/// In-memory equivalent of run_scenario + aggregate, without touching disk.
/// Runs replicates sequentially in (point, replicate) order.
inline SweepResult simulate(const Scenario& s) {
  validate(s);
  const Network base = build_base_network(s);
  const auto points = prepare_points(s, base);
  SweepResult result;
  for (std::size_t p = 0; p < points.size(); ++p) {
    PointSummary summary;
    summary.point = p;
    summary.target_rho = points[p].target_rho;
    summary.achieved_rho = points[p].achieved_rho;
    for (std::size_t r = 0; r < s.replicates; ++r) {
      const RunRecord rec = run_replicate(s, points[p].network, p, r);
      summary.final_fractions.push_back(rec.final_fraction_a());
      summary.class_mean_degree_a += rec.initial_class_mean_degree.at(0);
      summary.class_mean_degree_b += rec.initial_class_mean_degree.size() > 1 ? rec.initial_class_mean_degree[1] : 0.0;
    }
    summary.class_mean_degree_a /= static_cast<double>(s.replicates);
    summary.class_mean_degree_b /= static_cast<double>(s.replicates);
    detail::summarize(summary);
    result.points.push_back(std::move(summary));
  }
  detail::add_correlation(result);
  return result;
}

struct ScenarioOutput {
  SweepResult result;
  std::vector<RunRecord> records;  // ordered by run_id
};

/// Runs every replicate of every sweep point on a pool of `parallelism`
/// workers and writes the output directory:
///   meta.txt        resolved parameters (a valid config) + measured network stats
///   network.edges   base network; networks/point_<i>.edges for sweeps
///   degree_hist.csv degree,count of the base network
///   runs/run_<id>.csv and runs/index.csv
///   aggregate.csv, mean_series.csv, summary.txt
/// Aggregates are recomputed from the run files after all workers finish.
inline ScenarioOutput run_scenario(const Scenario& s, const std::filesystem::path& out_dir,
                                   std::size_t parallelism = 1) {
  namespace fs = std::filesystem;
  validate(s);
  const Network base = build_base_network(s);
  const auto points = prepare_points(s, base);

  fs::create_directories(out_dir / "runs");
  {
    auto os = detail::open_out(out_dir / "network.edges");
    write_edge_list(os, base);
    auto hist = detail::open_out(out_dir / "degree_hist.csv");
    write_degree_histogram_csv(hist, degree_stats(base));
  }
  if (!s.network.target_rho.empty()) {
    fs::create_directories(out_dir / "networks");
    for (std::size_t p = 0; p < points.size(); ++p) {
      auto os = detail::open_out(out_dir / "networks" / ("point_" + std::to_string(p) + ".edges"));
      write_edge_list(os, points[p].network);
    }
  }

  const std::size_t total = points.size() * s.replicates;
  std::vector<RunRecord> records(total);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::optional<Error> first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= total) return;
      {
        std::lock_guard lock(error_mutex);
        if (first_error) return;
      }
      const std::size_t p = job / s.replicates, r = job % s.replicates;
      try {
        records[job] = run_replicate(s, points[p].network, p, r);
        auto os = detail::open_out(out_dir / "runs" / detail::run_file_name(records[job].run_id));
        write_run_csv(os, records[job]);
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!first_error) {
          first_error = Error(e.code(), "scenario '" + s.name + "', point " + std::to_string(p) +
                                            ", replicate " + std::to_string(r) + ": " + e.what());
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t workers = std::max<std::size_t>(1, std::min(parallelism, total));
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (first_error) throw *first_error;

  {
    auto os = detail::open_out(out_dir / "runs" / "index.csv");
    os << std::setprecision(17);
    os << "run_id,point,replicate,seed,target_rho,achieved_rho,class_mean_degree_a,class_mean_degree_b,absorbed_at\n";
    for (std::size_t job = 0; job < total; ++job) {
      const auto& rec = records[job];
      const std::size_t p = job / s.replicates, r = job % s.replicates;
      os << rec.run_id << ',' << p << ',' << r << ',' << replicate_seed(s, r) << ',';
      if (points[p].target_rho) os << *points[p].target_rho;
      os << ',' << points[p].achieved_rho << ',' << rec.initial_class_mean_degree.at(0) << ','
         << (rec.initial_class_mean_degree.size() > 1 ? rec.initial_class_mean_degree[1] : 0.0) << ',';
      if (rec.absorbed_at) os << *rec.absorbed_at;
      os << '\n';
    }
  }

  SweepResult result = aggregate(out_dir);

  {
    auto os = detail::open_out(out_dir / "aggregate.csv");
    os << std::setprecision(17);
    os << "point,target_rho,achieved_rho,replicates,mean_final_fraction_a,std_final_fraction_a,extinct_a,extinct_b\n";
    for (const auto& p : result.points) {
      os << p.point << ',';
      if (p.target_rho) os << *p.target_rho;
      os << ',' << p.achieved_rho << ',' << p.final_fractions.size() << ',' << p.mean_final << ','
         << p.std_final << ',' << p.extinct_a << ',' << p.extinct_b << '\n';
    }
  }
  {
    // Mean trajectory per point, straight from the persisted run files.
    auto os = detail::open_out(out_dir / "mean_series.csv");
    os << std::setprecision(17);
    os << "point,step,mean_fraction_a\n";
    for (std::size_t p = 0; p < points.size(); ++p) {
      std::vector<RunRecord> runs;
      for (std::size_t r = 0; r < s.replicates; ++r) {
        auto in = detail::open_in(out_dir / "runs" / detail::run_file_name(p * s.replicates + r));
        runs.push_back(read_run_csv(in));
      }
      for (std::size_t i = 0; i < runs.front().samples.size(); ++i) {
        double sum = 0;
        for (const auto& rec : runs) sum += rec.samples.at(i).fraction_a;
        os << p << ',' << runs.front().samples[i].step << ',' << sum / static_cast<double>(runs.size()) << '\n';
      }
    }
  }
  {
    auto os = detail::open_out(out_dir / "summary.txt");
    os << std::setprecision(17);
    for (const auto& p : result.points) {
      const std::string k = "point." + std::to_string(p.point) + ".";
      os << k << "achieved_rho = " << p.achieved_rho << '\n';
      os << k << "mean_final_fraction_a = " << p.mean_final << '\n';
      os << k << "std_final_fraction_a = " << p.std_final << '\n';
      os << k << "extinct_a = " << p.extinct_a << '\n';
      os << k << "extinct_b = " << p.extinct_b << '\n';
    }
    if (result.correlation) os << "correlation = " << *result.correlation << '\n';
  }
  {
    auto os = detail::open_out(out_dir / "meta.txt");
    write_config(os, s);
    os << std::setprecision(17);
    const auto stats = degree_stats(base);
    os << "derived.adoption_normalizer = " << evolution_config(s).adoption.normalizer << '\n';
    os << "derived.moran_events_per_step = " << MoranConfig{s.replacement_rate}.events_per_step(s.network.nodes) << '\n';
    os << "measured.nodes = " << base.size() << '\n';
    os << "measured.edges = " << base.edge_count() << '\n';
    os << "measured.mean_degree = " << stats.mean_degree << '\n';
    os << "measured.max_degree = " << stats.max_degree << '\n';
    os << "measured.rho = " << rho_or_zero(base) << '\n';
    for (const auto& p : result.points) {
      const std::string k = "measured.point." + std::to_string(p.point) + ".";
      os << k << "achieved_rho = " << p.achieved_rho << '\n';
      os << k << "class_mean_degree_a = " << p.class_mean_degree_a << '\n';
      os << k << "class_mean_degree_b = " << p.class_mean_degree_b << '\n';
    }
  }
  return {std::move(result), std::move(records)};
}

}  // namespace netzd
