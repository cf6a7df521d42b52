#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "netzd/random.hpp"
#include "netzd/strategy.hpp"

namespace netzd {

// Transition matrix over joint outcomes (CC, CD, DC, DD), ordered from the
// first strategy's perspective.
struct PairChain {
  std::array<std::array<double, 4>, 4> transition{};
};

struct ExpectedPayoffPair {
  double e_ab = 0.0;
  double e_ba = 0.0;
};

inline PairChain build_chain(const MemoryOneStrategy& a, const MemoryOneStrategy& b) {
  PairChain chain;
  for (Outcome from : kAllOutcomes) {
    const double qa = a.coop_prob(from);
    const double qb = b.coop_prob(swap_perspective(from));
    auto& row = chain.transition[index_of(from)];
    row[index_of(Outcome::CC)] = qa * qb;
    row[index_of(Outcome::CD)] = qa * (1.0 - qb);
    row[index_of(Outcome::DC)] = (1.0 - qa) * qb;
    row[index_of(Outcome::DD)] = (1.0 - qa) * (1.0 - qb);
  }
  return chain;
}

namespace detail {

using Mat4 = Eigen::Matrix4d;

inline Mat4 to_eigen(const PairChain& chain) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = chain.transition[i][j];
  return m;
}

// reach[i][j]: j reachable from i in zero or more steps.
inline std::array<std::array<bool, 4>, 4> reachability(const PairChain& chain) {
  std::array<std::array<bool, 4>, 4> reach{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) reach[i][j] = (i == j) || chain.transition[i][j] > 0.0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
  return reach;
}

}  // namespace detail

/// Cesàro limit of the chain's powers: row i is the long-run occupation
/// distribution when starting from state i. Recurrent classes are found from
/// the exact zero pattern, each class gets its stationary vector, and
/// transient states are split between classes by their absorption
/// probabilities.
inline std::array<std::array<double, 4>, 4> cesaro_limit(const PairChain& chain) {
  const auto reach = detail::reachability(chain);
  const detail::Mat4 p = detail::to_eigen(chain);

  std::array<int, 4> class_of{-1, -1, -1, -1};
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < 4; ++i) {
    bool recurrent = true;
    for (int j = 0; j < 4; ++j)
      if (reach[i][j] && !reach[j][i]) recurrent = false;
    if (!recurrent || class_of[i] >= 0) continue;
    std::vector<int> members;
    for (int j = 0; j < 4; ++j)
      if (reach[i][j] && reach[j][i]) {
        members.push_back(j);
        class_of[j] = static_cast<int>(classes.size());
      }
    classes.push_back(std::move(members));
  }

  // Stationary vector of each closed class: pi (P_C - I) = 0, sum(pi) = 1.
  std::vector<std::array<double, 4>> stationary;
  for (const auto& members : classes) {
    const auto k = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXd a(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c)
        a(r, c) = p(members[c], members[r]) - (r == c ? 1.0 : 0.0);
    a.row(k - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
    rhs(k - 1) = 1.0;
    const Eigen::VectorXd pi = a.fullPivLu().solve(rhs);
    std::array<double, 4> full{};
    for (Eigen::Index r = 0; r < k; ++r) full[members[r]] = pi(r);
    stationary.push_back(full);
  }

  // Absorption probabilities h_c for transient states: (I - P_TT) h = P_TC 1.
  std::vector<int> transient;
  for (int i = 0; i < 4; ++i)
    if (class_of[i] < 0) transient.push_back(i);
  const auto nt = static_cast<Eigen::Index>(transient.size());
  Eigen::MatrixXd absorb = Eigen::MatrixXd::Zero(nt, static_cast<Eigen::Index>(classes.size()));
  if (nt > 0) {
    Eigen::MatrixXd a(nt, nt);
    for (Eigen::Index r = 0; r < nt; ++r)
      for (Eigen::Index c = 0; c < nt; ++c)
        a(r, c) = (r == c ? 1.0 : 0.0) - p(transient[r], transient[c]);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(nt, static_cast<Eigen::Index>(classes.size()));
    for (Eigen::Index r = 0; r < nt; ++r)
      for (int j = 0; j < 4; ++j)
        if (class_of[j] >= 0) rhs(r, class_of[j]) += p(transient[r], j);
    absorb = a.fullPivLu().solve(rhs);
  }

  std::array<std::array<double, 4>, 4> limit{};
  for (int i = 0; i < 4; ++i) {
    if (class_of[i] >= 0) {
      limit[i] = stationary[class_of[i]];
      continue;
    }
    const auto r = static_cast<Eigen::Index>(
        std::find(transient.begin(), transient.end(), i) - transient.begin());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int j = 0; j < 4; ++j)
        limit[i][j] += absorb(r, static_cast<Eigen::Index>(c)) * stationary[c][j];
  }
  return limit;
}

/// Long-run state occupation starting from the uniform distribution over the
/// four outcomes (the simulator's first move is a fair coin for each player).
inline std::array<double, 4> limiting_distribution(const PairChain& chain) {
  const auto limit = cesaro_limit(chain);
  std::array<double, 4> dist{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) dist[j] += 0.25 * limit[i][j];
  return dist;
}

inline ExpectedPayoffPair expected_payoffs(const MemoryOneStrategy& a, const MemoryOneStrategy& b,
                                           const PayoffMatrix& m) {
  const auto dist = limiting_distribution(build_chain(a, b));
  ExpectedPayoffPair e;
  for (Outcome o : kAllOutcomes) {
    const auto [pa, pb] = round_payoffs(o, m);
    e.e_ab += dist[index_of(o)] * pa;
    e.e_ba += dist[index_of(o)] * pb;
  }
  return e;
}

/// Direct simulation of repeated play between a and b, used as a test oracle
/// for expected_payoffs. The rounds are split into four episodes whose first
/// round is forced to CC, CD, DC and DD respectively, so the estimate targets
/// the same uniform-start long-run average even when the chain is reducible.
inline ExpectedPayoffPair monte_carlo_payoffs(const MemoryOneStrategy& a, const MemoryOneStrategy& b,
                                              const PayoffMatrix& m, std::uint64_t rounds,
                                              std::uint64_t seed) {
  if (rounds == 0) throw Error(Errc::InvalidParameter, "monte_carlo_payoffs: rounds must be >= 1");
  std::mt19937_64 rng(seed);
  ExpectedPayoffPair total;
  int episodes = 0;
  for (Outcome start : kAllOutcomes) {
    const std::uint64_t len = rounds / 4 + (index_of(start) < rounds % 4 ? 1 : 0);
    if (len == 0) continue;
    Outcome current = start;
    double sum_a = 0.0, sum_b = 0.0;
    for (std::uint64_t i = 0; i < len; ++i) {
      if (i > 0) {
        const bool a_coop = std::bernoulli_distribution(a.coop_prob(current))(rng);
        const bool b_coop = std::bernoulli_distribution(b.coop_prob(swap_perspective(current)))(rng);
        current = make_outcome(a_coop, b_coop);
      }
      const auto [pa, pb] = round_payoffs(current, m);
      sum_a += pa;
      sum_b += pb;
    }
    total.e_ab += sum_a / static_cast<double>(len);
    total.e_ba += sum_b / static_cast<double>(len);
    ++episodes;
  }
  total.e_ab /= episodes;
  total.e_ba /= episodes;
  return total;
}

}  // namespace netzd
