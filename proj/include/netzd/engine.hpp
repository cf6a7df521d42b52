#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "netzd/error.hpp"
#include "netzd/graph.hpp"
#include "netzd/random.hpp"
#include "netzd/strategy.hpp"

namespace netzd {

using StrategyIndex = std::uint8_t;

/// Strategy assignment, cumulative payoffs and per-edge memory for one run.
/// Edge memory is stored from the perspective of the edge's lower-indexed
/// endpoint.
class Population {
 public:
  static constexpr std::uint8_t kUnplayed = 4;

  Population(Network net, std::vector<MemoryOneStrategy> table, std::vector<StrategyIndex> assignment)
      : net_(std::move(net)),
        table_(std::move(table)),
        strategy_of_(std::move(assignment)),
        payoff_(net_.size(), 0.0),
        rounds_(net_.size(), 0),
        memory_(net_.edge_count(), kUnplayed) {
    if (table_.empty() || table_.size() > 255) {
      throw Error(Errc::InvalidParameter, "strategy table must have 1..255 entries");
    }
    if (strategy_of_.size() != net_.size()) {
      throw Error(Errc::InvalidParameter, "assignment size does not match node count");
    }
    counts_.assign(table_.size(), 0);
    for (StrategyIndex s : strategy_of_) {
      if (s >= table_.size()) throw Error(Errc::InvalidParameter, "assignment references unknown strategy");
      ++counts_[s];
    }
    thresholds_.resize(table_.size());
    for (std::size_t s = 0; s < table_.size(); ++s) {
      for (Outcome o : kAllOutcomes)
        thresholds_[s][index_of(o)] = to_threshold(table_[s].coop_prob(o));
      thresholds_[s][kUnplayed] = to_threshold(0.5);
    }
  }

  const Network& network() const noexcept { return net_; }
  std::size_t size() const noexcept { return net_.size(); }
  const std::vector<MemoryOneStrategy>& table() const noexcept { return table_; }

  StrategyIndex strategy_of(NodeId x) const noexcept { return strategy_of_[x]; }
  const std::vector<StrategyIndex>& assignment() const noexcept { return strategy_of_; }
  double payoff(NodeId x) const noexcept { return payoff_[x]; }
  /// Rounds played by x since it was last reset.
  std::uint64_t rounds_played(NodeId x) const noexcept { return rounds_[x]; }

  std::optional<Outcome> memory(EdgeId e) const noexcept {
    if (memory_[e] == kUnplayed) return std::nullopt;
    return static_cast<Outcome>(memory_[e]);
  }

  std::size_t count(StrategyIndex s) const noexcept { return s < counts_.size() ? counts_[s] : 0; }
  double fraction(StrategyIndex s) const noexcept {
    return size() ? static_cast<double>(count(s)) / static_cast<double>(size()) : 0.0;
  }

  void set_strategy(NodeId x, StrategyIndex s) {
    if (s >= table_.size()) throw Error(Errc::InvalidParameter, "unknown strategy index");
    --counts_[strategy_of_[x]];
    ++counts_[s];
    strategy_of_[x] = s;
  }

  /// Mean degree of the nodes currently holding each strategy (0 if none).
  std::vector<double> class_mean_degrees() const {
    std::vector<double> sum(table_.size(), 0.0);
    for (NodeId x = 0; x < size(); ++x) sum[strategy_of_[x]] += static_cast<double>(net_.degree(x));
    for (std::size_t s = 0; s < sum.size(); ++s)
      sum[s] = counts_[s] ? sum[s] / static_cast<double>(counts_[s]) : 0.0;
    return sum;
  }

  /// Mean cumulative payoff of the nodes holding strategy s (0 if none).
  double mean_payoff(StrategyIndex s) const {
    double sum = 0.0;
    for (NodeId x = 0; x < size(); ++x)
      if (strategy_of_[x] == s) sum += payoff_[x];
    return count(s) ? sum / static_cast<double>(count(s)) : 0.0;
  }

 private:
  friend void play_step(Population&, const PayoffMatrix&, Rng&);
  friend void reset_node(Population&, NodeId);

  // Cooperation is drawn as (32 random bits) < p * 2^32, exact at p = 0 and 1.
  static std::uint64_t to_threshold(double p) noexcept {
    return static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
  }

  Network net_;
  std::vector<MemoryOneStrategy> table_;
  std::vector<StrategyIndex> strategy_of_;
  std::vector<double> payoff_;
  std::vector<std::uint64_t> rounds_;
  std::vector<std::uint8_t> memory_;
  std::vector<std::size_t> counts_;
  std::vector<std::array<std::uint64_t, 5>> thresholds_;
};

/// One prisoner's dilemma round on every edge, in edge-id order. Each endpoint
/// conditions on the edge's last outcome seen from its own side; an unplayed
/// edge means a fair coin for both.
inline void play_step(Population& pop, const PayoffMatrix& m, Rng& rng) {
  static constexpr std::array<std::uint8_t, 5> kSwap = {0, 2, 1, 3, Population::kUnplayed};
  const auto pay = m.focal_payoffs();
  const auto& edges = pop.net_.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const NodeId u = edges[id].u, v = edges[id].v;
    const std::uint8_t mem = pop.memory_[id];
    const std::uint64_t bits = rng();
    const bool u_coop = (bits & 0xffffffffULL) < pop.thresholds_[pop.strategy_of_[u]][mem];
    const bool v_coop = (bits >> 32) < pop.thresholds_[pop.strategy_of_[v]][kSwap[mem]];
    const std::uint8_t o = static_cast<std::uint8_t>((u_coop ? 0 : 2) | (v_coop ? 0 : 1));
    pop.payoff_[u] += pay[o];
    pop.payoff_[v] += pay[kSwap[o]];
    ++pop.rounds_[u];
    ++pop.rounds_[v];
    pop.memory_[id] = o;
  }
}

/// Cumulative payoff averaged over the node's neighbours.
inline double fitness(const Population& pop, NodeId x) {
  const auto deg = pop.network().degree(x);
  if (deg == 0) throw Error(Errc::IsolatedNode, "node " + std::to_string(x) + " has no neighbours");
  return pop.payoff(x) / static_cast<double>(deg);
}

/// Zeroes x's payoff and forgets every interaction on its incident edges.
/// Neighbours keep their payoffs; the strategy is left to the caller.
inline void reset_node(Population& pop, NodeId x) {
  pop.payoff_[x] = 0.0;
  pop.rounds_[x] = 0;
  for (EdgeId e : pop.net_.incident_edges(x)) pop.memory_[e] = Population::kUnplayed;
}

inline Population init_random(Network net, const MemoryOneStrategy& a, const MemoryOneStrategy& b,
                              double fraction_a, std::uint64_t seed) {
  if (!(fraction_a >= 0.0 && fraction_a <= 1.0)) {
    throw Error(Errc::InvalidParameter, "fraction must lie in [0,1]");
  }
  const std::size_t n = net.size();
  const auto count_a = static_cast<std::size_t>(std::llround(fraction_a * static_cast<double>(n)));
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng = make_rng(seed, {0x696e6974ULL});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<StrategyIndex> assignment(n, 1);
  for (std::size_t i = 0; i < count_a; ++i) assignment[order[i]] = 0;
  return Population(std::move(net), {a, b}, std::move(assignment));
}

/// The round(fraction_hub * n) highest-degree nodes get strategy index 0
/// (strat_hub); equal degrees are ordered by a seeded shuffle.
inline Population init_hubs(Network net, const MemoryOneStrategy& strat_hub,
                            const MemoryOneStrategy& strat_rest, double fraction_hub,
                            std::uint64_t seed) {
  if (!(fraction_hub >= 0.0 && fraction_hub <= 1.0)) {
    throw Error(Errc::InvalidParameter, "fraction must lie in [0,1]");
  }
  const std::size_t n = net.size();
  const auto count_hub = static_cast<std::size_t>(std::llround(fraction_hub * static_cast<double>(n)));
  Rng rng = make_rng(seed, {0x68756273ULL});
  const auto order = hub_order(net, rng);
  std::vector<StrategyIndex> assignment(n, 1);
  for (std::size_t i = 0; i < count_hub; ++i) assignment[order[i]] = 0;
  return Population(std::move(net), {strat_hub, strat_rest}, std::move(assignment));
}

/// CSV: node_id,strategy_label,cumulative_payoff,degree
inline void write_snapshot_csv(std::ostream& os, const Population& pop) {
  os << "node_id,strategy_label,cumulative_payoff,degree\n";
  const auto old_precision = os.precision(17);
  for (NodeId x = 0; x < pop.size(); ++x) {
    os << x << ',' << pop.table()[pop.strategy_of(x)].label() << ',' << pop.payoff(x) << ','
       << pop.network().degree(x) << '\n';
  }
  os.precision(old_precision);
}

}  // namespace netzd
