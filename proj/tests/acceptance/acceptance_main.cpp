// Acceptance check: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   netzd_acceptance [--profile reduced|full] [--parallel N] [--only 1,5,11] [--out DIR]
//
// The reduced profile (200 nodes, 30k steps) is the CI profile; the full
// profile uses the published scale (1000 nodes, 150k steps).

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "netzd/netzd.hpp"

using namespace netzd;
namespace fs = std::filesystem;

namespace {

struct Context {
  bool full = false;
  std::size_t parallel = 1;
  fs::path out;
};

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

PointSummary run_preset(const Context& ctx, const std::string& name, std::size_t replicates = 20,
                        std::uint64_t seed = 1) {
  Scenario s = preset(name);
  if (!ctx.full) s = reduced_profile(s);
  s.replicates = replicates;
  s.base_seed = seed;
  const auto out = run_scenario(s, ctx.out / name, ctx.parallel);
  return out.result.points.at(0);
}

std::string census(const PointSummary& p) {
  return "mean " + fmt(p.mean_final) + ", extinct " + std::to_string(p.extinct_a) + "/" +
         std::to_string(p.final_fractions.size()) + ", survived " +
         std::to_string(p.final_fractions.size() - p.extinct_a);
}

bool mostly_extinct(const PointSummary& p) {
  return 10 * p.extinct_a >= 9 * p.final_fractions.size();
}

// 1. ZD construction
Verdict zd_construction(const Context&) {
  const auto zd = zd_complete(0.99, 0.01, PayoffMatrix{});
  const std::array<double, 4> want = {0.99, 0.97, 0.02, 0.01};
  double err = 0;
  for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(zd.probs()[i] - want[i]));
  return {err <= 1e-12, "max |error| = " + fmt(err, 3)};
}

// 2. Extortion identity
Verdict extortion(const Context&) {
  const PayoffMatrix m;
  const auto zd = named_strategy("zd_default");
  const double analytic = zd_opponent_payoff(0.99, 0.01, m);
  Rng rng = make_rng(2, {0x6f7070ULL});
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const MemoryOneStrategy opp(uniform01(rng), uniform01(rng), uniform01(rng), uniform01(rng), "random");
    const auto mc = monte_carlo_payoffs(opp, zd, m, 1000000, 1000 + i);
    worst = std::max(worst, std::abs(mc.e_ab - 2.0));
  }
  return {std::abs(analytic - 2.0) < 1e-12 && worst <= 0.05,
          "analytic " + fmt(analytic, 12) + ", worst simulated deviation " + fmt(worst, 3) + " over 20 opponents"};
}

// 3. Closed form vs simulation over the catalogue
Verdict oracle_equivalence(const Context&) {
  const PayoffMatrix m;
  const auto& names = strategy_names();
  double worst = 0;
  std::string worst_pair;
  std::size_t pairs = 0;
  std::uint64_t seed = 300;
  for (auto na : names) {
    for (auto nb : names) {
      const auto a = named_strategy(na), b = named_strategy(nb);
      const auto exact = expected_payoffs(a, b, m);
      const auto mc = monte_carlo_payoffs(a, b, m, 10000000, seed++);
      const double dev = std::max(std::abs(exact.e_ab - mc.e_ab), std::abs(exact.e_ba - mc.e_ba));
      if (dev > worst) {
        worst = dev;
        worst_pair = std::string(na) + "/" + std::string(nb);
      }
      ++pairs;
    }
  }
  return {worst <= 0.02, std::to_string(pairs) + " ordered pairs, worst deviation " + fmt(worst, 3) + " (" +
                             worst_pair + ")"};
}

// 4. Neutral Moran fixation
Verdict neutral_fixation(const Context&) {
  const std::size_t n = 50, trials = 10000;
  const Network net = complete_graph(n);
  const auto base = named_strategy("general_cooperator");
  const MemoryOneStrategy mutant(base.probs(), "mutant");
  EvolutionConfig cfg;
  cfg.sample_interval = 1000000;
  std::size_t fixed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<StrategyIndex> assign(n, 1);
    assign[t % n] = 0;
    Population pop(net, {mutant, base}, assign);
    const auto rec = run(pop, cfg, 10000000, PayoffMatrix{}, make_rng(4, {t})());
    if (!rec.absorbed_at) return {false, "trial " + std::to_string(t) + " did not absorb"};
    if (pop.count(0) == n) ++fixed;
  }
  const double p = static_cast<double>(fixed) / trials;
  const double expected = 1.0 / n;
  return {std::abs(p - expected) <= 0.3 * expected,
          std::to_string(fixed) + "/" + std::to_string(trials) + " fixed, p = " + fmt(p) + " vs 1/N = " +
              fmt(expected)};
}

// 5. Well-mixed Moran
Verdict wellmixed_moran(const Context& ctx) {
  const auto a = run_preset(ctx, "fig1_wellmixed_moran");
  const auto b = run_preset(ctx, "fig1_wellmixed_moran_f04");
  return {mostly_extinct(a) && mostly_extinct(b), "init 0.6: " + census(a) + "; init 0.4: " + census(b)};
}

// 6. Scale-free Moran
Verdict scalefree_moran(const Context& ctx) {
  const auto a = run_preset(ctx, "fig2_sf_moran");
  const auto b = run_preset(ctx, "fig2_sf_moran_hubs");
  return {mostly_extinct(a) && mostly_extinct(b), "random: " + census(a) + "; hubs: " + census(b)};
}

// 7. Well-mixed adoption
Verdict wellmixed_adoption(const Context& ctx) {
  const auto a = run_preset(ctx, "fig3_wellmixed_adoption");
  const auto b = run_preset(ctx, "fig3_wellmixed_adoption_f04");
  return {mostly_extinct(a) && mostly_extinct(b), "init 0.6: " + census(a) + "; init 0.4: " + census(b)};
}

// 8. Scale-free adoption, random init
Verdict scalefree_adoption_random(const Context& ctx) {
  const auto a = run_preset(ctx, "fig4a_sf_adoption_random");
  const std::size_t survived = a.final_fractions.size() - a.extinct_a;
  const bool pass = 10 * survived >= 7 * a.final_fractions.size() && a.mean_final > 0.0 && a.mean_final < 0.5;
  return {pass, census(a)};
}

// 9. Scale-free adoption, hub init
Verdict scalefree_adoption_hubs(const Context& ctx) {
  const auto zd_hubs = run_preset(ctx, "fig4b_sf_adoption_hubs");
  const auto pav_hubs = run_preset(ctx, "fig4b_sf_adoption_pavlov_hubs");
  // In the Pavlov-hubs scenario ZD is strategy b: its extinction is a = 1.
  const bool zd_gone = 10 * pav_hubs.extinct_b >= 9 * pav_hubs.final_fractions.size();
  return {zd_hubs.mean_final > 0.5 && zd_gone,
          "ZD hubs: ZD mean " + fmt(zd_hubs.mean_final) + "; Pavlov hubs: ZD extinct " +
              std::to_string(pav_hubs.extinct_b) + "/" + std::to_string(pav_hubs.final_fractions.size())};
}

// 10. Other strategies: hubs vs random init
Verdict rivals_direction(const Context& ctx) {
  bool pass = true;
  std::string detail;
  for (const char* name : {"fig5_gc", "fig5_coop", "fig6_defector", "fig6_tft"}) {
    const auto random = run_preset(ctx, name);
    const auto hubs = run_preset(ctx, std::string(name) + "_hubs");
    pass = pass && hubs.mean_final > random.mean_final;
    detail += std::string(detail.empty() ? "" : "; ") + preset(name).strategy_a + " hubs " + fmt(hubs.mean_final, 3) +
              " vs random " + fmt(random.mean_final, 3);
  }
  return {pass, detail};
}

// 11. Assortativity sweep
Verdict assortativity_sweep(const Context& ctx) {
  Scenario s = preset("fig7_assortativity_sweep");
  if (!ctx.full) s = reduced_profile(s);
  const auto out = run_scenario(s, ctx.out / s.name, ctx.parallel);
  const double threshold = ctx.full ? -0.5 : -0.4;
  std::string detail;
  for (const auto& p : out.result.points) {
    detail += "rho " + fmt(p.achieved_rho, 3) + " -> " + fmt(p.mean_final, 3) + "; ";
  }
  if (!out.result.correlation) return {false, detail + "correlation undefined"};
  const double r = *out.result.correlation;
  return {out.result.points.size() >= 5 && s.replicates >= 40 && r <= threshold,
          detail + "correlation " + fmt(r, 3) + " (threshold " + fmt(threshold, 2) + ")"};
}

// 12. Cross-module invariants (the unit suites test each in depth)
Verdict invariants(const Context&) {
  std::vector<std::string> broken;
  auto check = [&](bool ok, const char* what) {
    if (!ok) broken.emplace_back(what);
  };
  const Network ba = barabasi_albert(500, 2, 1);
  const auto rewired = rewire_to_assortativity(ba, -0.2, 0.02, 1000000, 1);
  check(rewired.network.degrees() == ba.degrees(), "degree preservation");
  check(rewired.network.connected(), "rewired connectivity");
  check(std::abs(assortativity(star_graph(10)).rho + 1.0) < 1e-12, "star rho = -1");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const double rho = assortativity(barabasi_albert(300, 1 + seed % 3, seed)).rho;
    check(rho >= -1.0 && rho <= 1.0, "rho in [-1,1]");
    check(regular_random(200, 8, seed).connected() && barabasi_albert(200, 2, seed).connected(),
          "generator connectivity");
  }
  {
    Population pop = init_random(ba, named_strategy("zd_default"), named_strategy("pavlov"), 0.5, 1);
    Rng rng(1);
    double total = 0;
    for (int step = 0; step < 100; ++step) {
      play_step(pop, PayoffMatrix{}, rng);
      double now = 0, expected = 0;
      for (NodeId x = 0; x < pop.size(); ++x) now += pop.payoff(x);
      for (EdgeId e = 0; e < ba.edge_count(); ++e) {
        const auto [pu, pv] = round_payoffs(*pop.memory(e), PayoffMatrix{});
        expected += pu + pv;
      }
      check(std::abs(now - total - expected) < 1e-6, "payoff conservation per edge-round");
      total = now;
    }
  }
  {
    Rng rng(2);
    for (int i = 0; i < 10000; ++i) {
      const double p = adoption_probability(50 * uniform01(rng), 50 * uniform01(rng), 1 + uniform_index(rng, 20),
                                            1 + uniform_index(rng, 20), 0.1 + uniform01(rng));
      check(p >= 0.0 && p <= 1.0, "adoption probability in [0,1]");
    }
  }
  {
    std::vector<StrategyIndex> assign(30, 1);
    assign[0] = 0;
    Population pop(complete_graph(30), {named_strategy("cooperator"), named_strategy("defector")}, assign);
    EvolutionConfig cfg;
    cfg.sample_interval = 10;
    const auto rec = run(pop, cfg, 50000, PayoffMatrix{}, 3);
    bool gone = false, reappeared = false;
    for (const auto& s : rec.samples) {
      if (gone && s.fraction_a > 0) reappeared = true;
      gone = gone || s.fraction_a == 0.0;
    }
    check(gone && !reappeared, "extinction absorbing");
  }
  {
    Scenario s = reduced_profile(preset("fig4a_sf_adoption_random"));
    s.network.nodes = 100;
    s.steps = 3000;
    s.replicates = 2;
    const auto a = simulate(s), b = simulate(s);
    check(a.points[0].final_fractions == b.points[0].final_fractions, "seed determinism");
  }
  std::string detail = broken.empty() ? "all invariants hold" : "broken:";
  for (const auto& b : broken) detail += " " + b;
  return {broken.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string profile = "reduced", only, out = "acceptance_out";
  std::size_t parallel = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--profile", profile, "reduced (200 nodes, 30k steps) or full (1000 nodes, 150k steps)")
      ->check(CLI::IsMember({"reduced", "full"}));
  app.add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "Comma-separated criterion numbers");
  app.add_option("--out", out, "Directory for scenario outputs");
  CLI11_PARSE(app, argc, argv);

  const Context ctx{profile == "full", parallel, fs::path(out) / profile};
  std::set<int> selected;
  {
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) selected.insert(std::stoi(item));
  }

  using Check = Verdict (*)(const Context&);
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"ZD construction", zd_construction},
      {"extortion identity", extortion},
      {"closed form vs simulation", oracle_equivalence},
      {"neutral Moran fixation", neutral_fixation},
      {"well-mixed Moran: ZD extinct", wellmixed_moran},
      {"scale-free Moran: ZD extinct", scalefree_moran},
      {"well-mixed adoption: ZD extinct", wellmixed_adoption},
      {"scale-free adoption, random init: ZD survives as minority", scalefree_adoption_random},
      {"scale-free adoption, hub init", scalefree_adoption_hubs},
      {"other strategies: hubs beat random init", rivals_direction},
      {"assortativity sweep correlation", assortativity_sweep},
      {"module invariants", invariants},
  };

  std::cout << "profile = " << profile << std::endl;
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << number << " (" << criteria[i].first << "): "
              << v.detail << " [" << fmt(secs, 3) << " s]" << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing" << std::endl;
  return failures ? 1 : 0;
}
