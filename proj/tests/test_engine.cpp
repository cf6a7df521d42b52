#include <gtest/gtest.h>

#include <sstream>

#include "netzd/engine.hpp"
#include "netzd/markov.hpp"

using namespace netzd;

namespace {

const PayoffMatrix kDefault;

Population two_strategy(Network net, const char* a, const char* b, std::vector<StrategyIndex> assign) {
  return Population(std::move(net), {named_strategy(a), named_strategy(b)}, std::move(assign));
}

}  // namespace

TEST(Population, ValidatesAssignment) {
  EXPECT_THROW(two_strategy(complete_graph(3), "pavlov", "defector", {0, 1}), Error);
  EXPECT_THROW(two_strategy(complete_graph(3), "pavlov", "defector", {0, 1, 2}), Error);
  EXPECT_THROW(Population(complete_graph(3), {}, {0, 0, 0}), Error);
}

TEST(PlayStep, PayoffsAreTheSumOfEdgeOutcomes) {
  const auto net = barabasi_albert(200, 2, 1);
  std::vector<StrategyIndex> assign(net.size());
  for (NodeId x = 0; x < net.size(); ++x) assign[x] = x % 3;
  Population pop(net, {named_strategy("zd_default"), named_strategy("pavlov"), named_strategy("general_cooperator")},
                 assign);
  Rng rng(4);
  std::vector<double> expected(net.size(), 0.0);
  for (int step = 0; step < 50; ++step) {
    play_step(pop, kDefault, rng);
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const auto o = pop.memory(e);
      ASSERT_TRUE(o.has_value());
      const auto [pu, pv] = round_payoffs(*o, kDefault);
      expected[net.edges()[e].u] += pu;
      expected[net.edges()[e].v] += pv;
    }
    for (NodeId x = 0; x < net.size(); ++x) {
      ASSERT_DOUBLE_EQ(pop.payoff(x), expected[x]);
      ASSERT_EQ(pop.rounds_played(x), (step + 1) * net.degree(x));
    }
  }
}

TEST(PlayStep, EveryEdgeRoundPaysOneOfThreeTotals) {
  Population pop = two_strategy(Network(2, {{0, 1}}), "general_cooperator", "zd_default", {0, 1});
  Rng rng(8);
  double before = 0;
  for (int i = 0; i < 1000; ++i) {
    play_step(pop, kDefault, rng);
    const double total = pop.payoff(0) + pop.payoff(1);
    const double delta = total - before;
    EXPECT_TRUE(delta == 6.0 || delta == 5.0 || delta == 2.0) << delta;
    before = total;
  }
}

TEST(PlayStep, HomogeneousDefectors) {
  Population pop = two_strategy(complete_graph(5), "defector", "pavlov", {0, 0, 0, 0, 0});
  Rng rng(1);
  play_step(pop, kDefault, rng);  // the first round is a coin flip
  const std::vector<double> after_first = {pop.payoff(0), pop.payoff(1)};
  for (int i = 0; i < 10; ++i) play_step(pop, kDefault, rng);
  for (NodeId x = 0; x < 2; ++x) EXPECT_DOUBLE_EQ(pop.payoff(x) - after_first[x], 10 * 4 * kDefault.p());
}

TEST(PlayStep, PairAverageApproachesLongRunPayoff) {
  Population pop = two_strategy(Network(2, {{0, 1}}), "zd_default", "pavlov", {0, 1});
  Rng rng(2024);
  const std::size_t rounds = 1000000;
  for (std::size_t i = 0; i < rounds; ++i) play_step(pop, kDefault, rng);
  EXPECT_NEAR(pop.payoff(1) / rounds, 2.0, 0.05);
  EXPECT_NEAR(pop.payoff(0) / rounds, 27.0 / 11.0, 0.05);
}

TEST(PlayStep, IsDeterministicForASeed) {
  const auto net = barabasi_albert(100, 2, 3);
  auto make = [&] {
    Population pop = init_random(net, named_strategy("zd_default"), named_strategy("pavlov"), 0.5, 6);
    Rng rng(99);
    for (int i = 0; i < 20; ++i) play_step(pop, kDefault, rng);
    std::vector<double> p;
    for (NodeId x = 0; x < pop.size(); ++x) p.push_back(pop.payoff(x));
    return p;
  };
  EXPECT_EQ(make(), make());
}

TEST(Fitness, IsPayoffPerDegree) {
  Population pop = two_strategy(star_graph(4), "defector", "cooperator", {0, 1, 1, 1});
  Rng rng(3);
  for (int i = 0; i < 5; ++i) play_step(pop, kDefault, rng);
  EXPECT_DOUBLE_EQ(fitness(pop, 0), pop.payoff(0) / 3.0);
  EXPECT_DOUBLE_EQ(fitness(pop, 1), pop.payoff(1));
  Population isolated = two_strategy(Network(2, {}), "defector", "cooperator", {0, 1});
  try {
    fitness(isolated, 0);
    FAIL() << "expected IsolatedNode";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IsolatedNode);
  }
}

TEST(ResetNode, ClearsPayoffAndIncidentMemoriesOnly) {
  const auto net = complete_graph(4);
  Population pop = two_strategy(net, "pavlov", "defector", {0, 1, 0, 1});
  Rng rng(5);
  for (int i = 0; i < 3; ++i) play_step(pop, kDefault, rng);
  const double other = pop.payoff(1);
  reset_node(pop, 0);
  EXPECT_EQ(pop.payoff(0), 0.0);
  EXPECT_EQ(pop.rounds_played(0), 0u);
  EXPECT_EQ(pop.payoff(1), other);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const bool incident = net.edges()[e].u == 0 || net.edges()[e].v == 0;
    EXPECT_EQ(pop.memory(e).has_value(), !incident);
  }
}

TEST(Init, RandomPlacesExactCount) {
  const auto net = regular_random(200, 4, 1);
  for (double f : {0.0, 0.4, 0.6, 1.0}) {
    const auto pop = init_random(net, named_strategy("zd_default"), named_strategy("pavlov"), f, 3);
    EXPECT_EQ(pop.count(0), static_cast<std::size_t>(std::llround(f * 200)));
    EXPECT_EQ(pop.count(0) + pop.count(1), 200u);
  }
  EXPECT_THROW(init_random(net, named_strategy("pavlov"), named_strategy("pavlov"), 1.5, 1), Error);
}

TEST(Init, HubsTakeTheHighestDegrees) {
  const auto net = barabasi_albert(1000, 2, 1);
  const auto pop = init_hubs(net, named_strategy("zd_default"), named_strategy("pavlov"), 0.6, 2);
  EXPECT_EQ(pop.count(0), 600u);
  std::size_t min_hub = SIZE_MAX, max_rest = 0;
  for (NodeId x = 0; x < net.size(); ++x) {
    if (pop.strategy_of(x) == 0) min_hub = std::min(min_hub, net.degree(x));
    else max_rest = std::max(max_rest, net.degree(x));
  }
  EXPECT_GE(min_hub, max_rest);
  const auto deg = pop.class_mean_degrees();
  EXPECT_GT(deg[0], deg[1]);
  EXPECT_NEAR(0.6 * deg[0] + 0.4 * deg[1], degree_stats(net).mean_degree, 1e-9);
}

TEST(Snapshot, CsvLayout) {
  Population pop = two_strategy(Network(2, {{0, 1}}), "pavlov", "defector", {0, 1});
  std::ostringstream os;
  write_snapshot_csv(os, pop);
  EXPECT_EQ(os.str(), "node_id,strategy_label,cumulative_payoff,degree\n0,pavlov,0,1\n1,defector,0,1\n");
}
