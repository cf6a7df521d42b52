#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "netzd/graph.hpp"

namespace netzd::oracle {

/// ZD completion from the equalizer condition: the strategy vector minus
/// (1, 1, 0, 0) must equal beta * opponent_payoffs + gamma, where the
/// opponent's payoffs in states CC, CD, DC, DD are (R, T, S, P). beta and
/// gamma are solved from the CC and DD components, then p2 and p3 read off.
inline std::pair<double, double> zd_by_equalizer(double p1, double p4, double t, double r, double p, double s) {
  // [r 1; p 1] [beta; gamma] = [p1 - 1; p4]
  const double det = r - p;
  const double beta = ((p1 - 1.0) - p4) / det;
  const double gamma = (r * p4 - p * (p1 - 1.0)) / det;
  return {1.0 + beta * t + gamma, beta * s + gamma};
}

/// Newman's edge-list form of the degree correlation coefficient, using
/// degrees directly (the remaining-degree shift cancels).
inline double newman_assortativity(const Network& g) {
  const double m = static_cast<double>(g.edge_count());
  double prod = 0, sum = 0, sq = 0;
  for (const auto& e : g.edges()) {
    const double j = static_cast<double>(g.degree(e.u));
    const double k = static_cast<double>(g.degree(e.v));
    prod += j * k;
    sum += 0.5 * (j + k);
    sq += 0.5 * (j * j + k * k);
  }
  const double mean = sum / m;
  const double den = sq / m - mean * mean;
  if (std::abs(den) < 1e-12) return 0.0;
  return (prod / m - mean * mean) / den;
}

/// Classical fixation probability of a single neutral mutant in a Moran
/// population of size n.
inline double neutral_fixation(std::size_t n) { return 1.0 / static_cast<double>(n); }

}  // namespace netzd::oracle
