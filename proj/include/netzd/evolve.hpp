#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "netzd/engine.hpp"
#include "netzd/error.hpp"
#include "netzd/markov.hpp"
#include "netzd/random.hpp"

namespace netzd {

enum class Process { Moran, Adoption };

inline std::string_view process_name(Process p) noexcept {
  return p == Process::Moran ? "moran" : "adoption";
}

struct MoranConfig {
  double replacement_rate = 0.001;

  /// Death-birth events per time-step: max(1, round(rate * n)).
  std::size_t events_per_step(std::size_t n) const {
    if (!(replacement_rate > 0.0 && replacement_rate <= 1.0)) {
      throw Error(Errc::InvalidParameter, "replacement rate must lie in (0,1]");
    }
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(replacement_rate * static_cast<double>(n))));
  }
};

struct AdoptionConfig {
  /// Scale of the payoff gap: |E(A,B) - E(B,A)| of the competing strategies,
  /// or T - S when those tie.
  double normalizer = 1.0;
  /// Whether a node that copies a strategy also starts afresh (zero payoff,
  /// unplayed memories) as in a Moran replacement.
  bool reset_on_adopt = true;
};

inline AdoptionConfig make_adoption_config(const MemoryOneStrategy& a, const MemoryOneStrategy& b,
                                           const PayoffMatrix& m) {
  const auto e = expected_payoffs(a, b, m);
  const double d = std::abs(e.e_ab - e.e_ba);
  AdoptionConfig cfg;
  cfg.normalizer = d > 1e-12 ? d : m.t() - m.s();
  return cfg;
}

/// p = clamp(max(0, (P_y - P_x) / (k_> * D)), 0, 1) with k_> = max(k_x, k_y).
inline double adoption_probability(double payoff_x, double payoff_y, std::size_t degree_x,
                                   std::size_t degree_y, double normalizer) {
  const double k = static_cast<double>(std::max(degree_x, degree_y));
  const double p = (payoff_y - payoff_x) / (k * normalizer);
  return std::clamp(p, 0.0, 1.0);
}

/// Neighbour of x drawn with probability proportional to fitness; uniform if
/// every neighbour has zero fitness. Negative fitness counts as zero weight.
inline NodeId select_neighbor(const Population& pop, NodeId x, Rng& rng) {
  const auto nbrs = pop.network().neighbors(x);
  if (nbrs.empty()) throw Error(Errc::IsolatedNode, "node " + std::to_string(x) + " has no neighbours");
  double total = 0.0;
  for (NodeId y : nbrs) total += std::max(0.0, fitness(pop, y));
  if (!(total > 0.0)) return nbrs[uniform_index(rng, nbrs.size())];
  double target = uniform01(rng) * total;
  for (NodeId y : nbrs) {
    target -= std::max(0.0, fitness(pop, y));
    if (target < 0.0) return y;
  }
  // Rounding can leave target at ~0 after the loop; fall back to the last
  // neighbour with positive weight.
  for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
    if (fitness(pop, *it) > 0.0) return *it;
  return nbrs.back();
}

struct EventResult {
  NodeId focal = 0;
  NodeId model = 0;
  bool changed = false;  // focal's strategy changed
};

/// Death-birth: a uniformly chosen node is replaced by a copy of a
/// fitness-selected neighbour's strategy and starts afresh.
inline EventResult moran_event(Population& pop, Rng& rng) {
  const auto x = static_cast<NodeId>(uniform_index(rng, pop.size()));
  const NodeId y = select_neighbor(pop, x, rng);
  const bool changed = pop.strategy_of(x) != pop.strategy_of(y);
  pop.set_strategy(x, pop.strategy_of(y));
  reset_node(pop, x);
  return {x, y, changed};
}

/// Strategy adoption: a uniformly chosen node compares its cumulative payoff
/// with a fitness-selected neighbour and copies that neighbour's strategy with
/// adoption_probability. Copying resets the node when cfg.reset_on_adopt is
/// set; when both already share a strategy nothing happens.
inline EventResult adoption_event(Population& pop, const AdoptionConfig& cfg, Rng& rng) {
  const auto x = static_cast<NodeId>(uniform_index(rng, pop.size()));
  const NodeId y = select_neighbor(pop, x, rng);
  const double p = adoption_probability(pop.payoff(x), pop.payoff(y), pop.network().degree(x),
                                        pop.network().degree(y), cfg.normalizer);
  const bool adopt = uniform01(rng) < p;
  if (!adopt || pop.strategy_of(x) == pop.strategy_of(y)) return {x, y, false};
  pop.set_strategy(x, pop.strategy_of(y));
  if (cfg.reset_on_adopt) reset_node(pop, x);
  return {x, y, true};
}

struct EvolutionConfig {
  Process process = Process::Moran;
  MoranConfig moran;
  AdoptionConfig adoption;
  std::size_t sample_interval = 100;
};

struct Sample {
  std::size_t step = 0;
  double fraction_a = 0.0;
  double fraction_b = 0.0;
  double mean_payoff_a = 0.0;
  double mean_payoff_b = 0.0;
};

/// Time series of one seeded run. Fractions refer to strategy indices 0 (a)
/// and 1 (b) of the population's table.
struct RunRecord {
  std::size_t run_id = 0;
  std::vector<Sample> samples;
  std::size_t steps = 0;
  std::optional<std::size_t> absorbed_at;  // step at which one strategy went extinct
  std::vector<double> initial_class_mean_degree;

  double final_fraction_a() const { return samples.empty() ? 0.0 : samples.back().fraction_a; }
};

namespace detail {

inline Sample take_sample(const Population& pop, std::size_t step) {
  Sample s;
  s.step = step;
  s.fraction_a = pop.fraction(0);
  s.fraction_b = pop.fraction(1);
  s.mean_payoff_a = pop.mean_payoff(0);
  s.mean_payoff_b = pop.table().size() > 1 ? pop.mean_payoff(1) : 0.0;
  return s;
}

inline bool absorbed(const Population& pop) {
  return pop.count(0) == 0 || pop.count(0) == pop.size();
}

}  // namespace detail

/// Each time-step plays one round on every edge and then applies the
/// configured evolution events. Samples are taken at step 0, every
/// sample_interval steps and at the last step. Once a strategy is extinct the
/// run stops and the remaining samples repeat the absorbed state.
inline RunRecord run(Population& pop, const EvolutionConfig& cfg, std::size_t steps,
                     const PayoffMatrix& payoffs, std::uint64_t seed, std::size_t run_id = 0) {
  if (steps < 1) throw Error(Errc::InvalidParameter, "run: steps must be >= 1");
  if (cfg.sample_interval < 1) throw Error(Errc::InvalidParameter, "run: sample interval must be >= 1");
  if (cfg.process == Process::Adoption && !(cfg.adoption.normalizer > 0.0)) {
    throw Error(Errc::InvalidParameter, "run: adoption normalizer must be positive");
  }
  const std::size_t events =
      cfg.process == Process::Moran ? cfg.moran.events_per_step(pop.size()) : std::size_t{1};

  RunRecord rec;
  rec.run_id = run_id;
  rec.steps = steps;
  rec.initial_class_mean_degree = pop.class_mean_degrees();
  rec.samples.reserve(steps / cfg.sample_interval + 2);
  rec.samples.push_back(detail::take_sample(pop, 0));
  if (detail::absorbed(pop)) rec.absorbed_at = 0;

  Rng rng = make_rng(seed, {0x72756eULL});
  for (std::size_t step = 1; step <= steps && !rec.absorbed_at; ++step) {
    play_step(pop, payoffs, rng);
    for (std::size_t e = 0; e < events; ++e) {
      if (cfg.process == Process::Moran) {
        moran_event(pop, rng);
      } else {
        adoption_event(pop, cfg.adoption, rng);
      }
    }
    if (detail::absorbed(pop)) rec.absorbed_at = step;
    if (step % cfg.sample_interval == 0 || step == steps) {
      rec.samples.push_back(detail::take_sample(pop, step));
    }
  }

  // Every run has the same sample grid; after absorption the grid points are
  // filled with the absorbed state.
  if (rec.absorbed_at && rec.samples.back().step != steps) {
    const Sample last = detail::take_sample(pop, *rec.absorbed_at);
    std::size_t next = rec.samples.back().step + cfg.sample_interval;
    for (; next <= steps; next += cfg.sample_interval) {
      Sample s = last;
      s.step = next;
      rec.samples.push_back(s);
    }
    if (rec.samples.back().step != steps) {
      Sample s = last;
      s.step = steps;
      rec.samples.push_back(s);
    }
  }
  return rec;
}

/// CSV rows for one run; header is written when `header` is set.
inline void write_run_csv(std::ostream& os, const RunRecord& rec, bool header = true) {
  if (header) os << "run_id,step,fraction_a,fraction_b,mean_payoff_a,mean_payoff_b\n";
  const auto old_precision = os.precision(17);
  for (const auto& s : rec.samples) {
    os << rec.run_id << ',' << s.step << ',' << s.fraction_a << ',' << s.fraction_b << ','
       << s.mean_payoff_a << ',' << s.mean_payoff_b << '\n';
  }
  os.precision(old_precision);
}

}  // namespace netzd
