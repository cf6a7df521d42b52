#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "netzd/error.hpp"
#include "netzd/random.hpp"

namespace netzd {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

inline std::uint64_t edge_key(NodeId a, NodeId b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline bool adjacency_connected(const std::vector<std::vector<NodeId>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == adj.size();
}

inline std::vector<std::vector<NodeId>> adjacency_lists(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

}  // namespace detail

/// Undirected simple graph over nodes 0..n-1. Edges are stored once with
/// u < v, sorted; the edge index is stable for the lifetime of the value.
class Network {
 public:
  Network() = default;

  Network(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ > std::numeric_limits<NodeId>::max()) {
      throw Error(Errc::InvalidParameter, "network too large");
    }
    for (auto& e : edges_) {
      if (e.u >= n_ || e.v >= n_) throw Error(Errc::InvalidParameter, "edge endpoint out of range");
      if (e.u == e.v) throw Error(Errc::InvalidParameter, "self-loop on node " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw Error(Errc::InvalidParameter, "duplicate edge");
    }
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    neighbors_.resize(2 * edges_.size());
    incident_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      neighbors_[fill[e.u]] = e.v;
      incident_[fill[e.u]++] = id;
      neighbors_[fill[e.v]] = e.u;
      incident_[fill[e.v]++] = id;
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(NodeId x) const noexcept { return offsets_[x + 1] - offsets_[x]; }

  std::span<const NodeId> neighbors(NodeId x) const noexcept {
    return {neighbors_.data() + offsets_[x], degree(x)};
  }
  /// Edge ids incident to x, aligned with neighbors(x).
  std::span<const EdgeId> incident_edges(NodeId x) const noexcept {
    return {incident_.data() + offsets_[x], degree(x)};
  }

  bool has_edge(NodeId a, NodeId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (NodeId x = 0; x < n_; ++x) d[x] = degree(x);
    return d;
  }

  bool connected() const { return detail::adjacency_connected(detail::adjacency_lists(n_, edges_)); }

  friend bool operator==(const Network& a, const Network& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<EdgeId> incident_;
};

// ---------------------------------------------------------------------------
// Generators

inline Network complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Network(n, std::move(edges));
}

/// Node 0 is the hub.
inline Network star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
  return Network(n, std::move(edges));
}

/// Connected k-regular random graph. Stubs are paired at random; stub pairs
/// that would form a loop or a multi-edge go back into the pool and are
/// re-paired, and the whole attempt restarts if the pool gets stuck or the
/// result is disconnected.
inline Network regular_random(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k >= n || (n * k) % 2 != 0) {
    throw Error(Errc::InfeasibleDegree, "no simple " + std::to_string(k) + "-regular graph on " +
                                            std::to_string(n) + " nodes");
  }
  Rng rng = make_rng(seed, {0x7265675fULL});
  if (k == 0) {
    if (n == 1) return Network(1, {});
    throw Error(Errc::InfeasibleDegree, "0-regular graph on more than one node is disconnected");
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<NodeId> stubs;
    stubs.reserve(n * k);
    for (NodeId x = 0; x < n; ++x) stubs.insert(stubs.end(), k, x);
    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    edges.reserve(n * k / 2);
    bool stuck = false;
    while (!stubs.empty()) {
      std::shuffle(stubs.begin(), stubs.end(), rng);
      std::vector<NodeId> leftover;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId a = stubs[i], b = stubs[i + 1];
        if (a != b && present.insert(detail::edge_key(a, b)).second) {
          edges.push_back({a, b});
        } else {
          leftover.push_back(a);
          leftover.push_back(b);
        }
      }
      if (!leftover.empty() && leftover.size() == stubs.size()) {
        bool suitable = false;
        for (std::size_t i = 0; i < leftover.size() && !suitable; ++i)
          for (std::size_t j = i + 1; j < leftover.size() && !suitable; ++j)
            suitable = leftover[i] != leftover[j] &&
                       !present.contains(detail::edge_key(leftover[i], leftover[j]));
        if (!suitable) {
          stuck = true;
          break;
        }
      }
      stubs = std::move(leftover);
    }
    if (stuck) continue;
    Network g(n, std::move(edges));
    if (g.connected()) return g;
  }
  throw Error(Errc::InfeasibleDegree, "failed to generate a connected regular graph");
}

/// Preferential attachment growth from a complete seed graph on max(m, 2)
/// nodes. Each arriving node links to m distinct existing nodes chosen with
/// probability proportional to their current degree.
inline Network barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t m0 = std::max<std::size_t>(m, 2);
  if (m < 1 || m >= n || n < m0) {
    throw Error(Errc::InvalidParameter, "barabasi_albert requires 1 <= m < n");
  }
  Rng rng = make_rng(seed, {0x62615f5fULL});
  std::vector<Edge> edges;
  std::vector<NodeId> ends;  // each node appears once per incident edge
  for (NodeId a = 0; a < m0; ++a)
    for (NodeId b = a + 1; b < m0; ++b) {
      edges.push_back({a, b});
      ends.push_back(a);
      ends.push_back(b);
    }
  std::vector<NodeId> chosen;
  for (NodeId x = static_cast<NodeId>(m0); x < n; ++x) {
    chosen.clear();
    while (chosen.size() < m) {
      const NodeId t = ends[uniform_index(rng, ends.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (NodeId t : chosen) {
      edges.push_back({t, x});
      ends.push_back(t);
      ends.push_back(x);
    }
  }
  return Network(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Degree statistics

struct DegreeStats {
  double mean_degree = 0.0;
  std::size_t max_degree = 0;
  std::map<std::size_t, std::size_t> histogram;  // degree -> node count
  std::vector<NodeId> by_degree;                 // degree descending, id ascending on ties
};

inline DegreeStats degree_stats(const Network& g) {
  DegreeStats st;
  for (NodeId x = 0; x < g.size(); ++x) {
    ++st.histogram[g.degree(x)];
    st.max_degree = std::max(st.max_degree, g.degree(x));
  }
  st.mean_degree = g.size() ? 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.size()) : 0.0;
  st.by_degree.resize(g.size());
  std::iota(st.by_degree.begin(), st.by_degree.end(), NodeId{0});
  std::stable_sort(st.by_degree.begin(), st.by_degree.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  return st;
}

/// Nodes sorted by degree, highest first; nodes of equal degree appear in a
/// seeded random order so that "the top x%" is well defined on plateaus.
inline std::vector<NodeId> hub_order(const Network& g, Rng& rng) {
  std::vector<NodeId> order(g.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  return order;
}

struct PowerLawFit {
  double alpha = 0.0;   // prefactor in y = alpha * x^-gamma
  double gamma = 0.0;   // exponent
  double r = 0.0;       // correlation of the log-log points
  std::size_t points = 0;
};

/// Least-squares line through (log x, log y); points with x <= 0 or y <= 0 are
/// skipped.
inline PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points)
    if (x > 0 && y > 0) logs.emplace_back(std::log(x), std::log(y));
  if (logs.size() < 2) throw Error(Errc::DegenerateInput, "power-law fit needs two positive points");
  const double k = static_cast<double>(logs.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0) throw Error(Errc::DegenerateInput, "power-law fit needs distinct x values");
  const double slope = sxy / sxx;
  PowerLawFit fit;
  fit.gamma = -slope;
  fit.alpha = std::exp(my - slope * mx);
  fit.r = syy > 0 ? sxy / std::sqrt(sxx * syy) : 0.0;
  fit.points = logs.size();
  return fit;
}

/// Fits p(k) ~ k^-gamma on logarithmically binned degree frequencies. Each
/// bin covers integer degrees [lo, hi) with hi/lo ~ bin_ratio; its density is
/// the node fraction divided by the number of integer degrees in the bin.
inline PowerLawFit fit_degree_power_law(const std::map<std::size_t, std::size_t>& histogram,
                                        double bin_ratio = 2.0) {
  if (!(bin_ratio > 1.0)) throw Error(Errc::InvalidParameter, "bin_ratio must exceed 1");
  std::size_t total = 0, kmax = 0;
  for (const auto& [k, c] : histogram) {
    total += c;
    kmax = std::max(kmax, k);
  }
  std::vector<std::pair<double, double>> points;
  double lo_edge = 1.0;
  while (static_cast<std::size_t>(std::ceil(lo_edge)) <= kmax) {
    const auto lo = static_cast<std::size_t>(std::ceil(lo_edge));
    auto hi = static_cast<std::size_t>(std::ceil(lo_edge * bin_ratio));
    if (hi <= lo) hi = lo + 1;
    std::size_t count = 0;
    for (auto it = histogram.lower_bound(lo); it != histogram.end() && it->first < hi; ++it)
      count += it->second;
    if (count > 0) {
      const double width = static_cast<double>(hi - lo);
      const double x = std::sqrt(static_cast<double>(lo) * static_cast<double>(hi - 1));
      points.emplace_back(x, static_cast<double>(count) / static_cast<double>(total) / width);
    }
    lo_edge = static_cast<double>(hi);
  }
  return fit_power_law(points);
}

// ---------------------------------------------------------------------------
// Assortativity

/// Remaining-degree mixing statistics of a network. Index j is a remaining
/// degree (degree - 1).
struct DegreeMixing {
  std::vector<double> q;               // excess-degree distribution
  std::vector<std::vector<double>> e;  // joint remaining-degree distribution over links
  double sigma_q = 0.0;
  double rho = 0.0;
};

inline DegreeMixing assortativity(const Network& g) {
  if (g.edge_count() == 0) throw Error(Errc::EmptyGraph, "assortativity of a graph without edges");
  std::size_t kmax = 0;
  for (NodeId x = 0; x < g.size(); ++x) kmax = std::max(kmax, g.degree(x));
  DegreeMixing mix;
  mix.q.assign(kmax, 0.0);
  mix.e.assign(kmax, std::vector<double>(kmax, 0.0));
  const double half = 0.5 / static_cast<double>(g.edge_count());
  for (const auto& edge : g.edges()) {
    const std::size_t j = g.degree(edge.u) - 1, k = g.degree(edge.v) - 1;
    mix.e[j][k] += half;
    mix.e[k][j] += half;
    mix.q[j] += half;
    mix.q[k] += half;
  }
  double mean = 0, second = 0;
  for (std::size_t j = 0; j < kmax; ++j) {
    mean += static_cast<double>(j) * mix.q[j];
    second += static_cast<double>(j * j) * mix.q[j];
  }
  const double var = second - mean * mean;
  mix.sigma_q = var > 0 ? std::sqrt(var) : 0.0;
  if (var <= 1e-12 * (1.0 + second)) {
    mix.sigma_q = 0.0;
    mix.rho = 0.0;
    return mix;
  }
  double num = 0;
  for (std::size_t j = 0; j < kmax; ++j)
    for (std::size_t k = 0; k < kmax; ++k)
      num += static_cast<double>(j * k) * (mix.e[j][k] - mix.q[j] * mix.q[k]);
  mix.rho = std::clamp(num / var, -1.0, 1.0);
  return mix;
}

struct RewireResult {
  Network network;
  double rho = 0.0;
  std::size_t attempts = 0;
  std::size_t accepted = 0;
};

/// Raised when rewiring runs out of attempts more than 2*tol away from the
/// target. Carries the closest network reached so the caller may still use it.
class TargetUnreachable : public Error {
 public:
  TargetUnreachable(const std::string& what, RewireResult best)
      : Error(Errc::TargetUnreachable, what), best_(std::move(best)) {}
  const RewireResult& best() const noexcept { return best_; }

 private:
  RewireResult best_;
};

/// Degree-preserving double-edge swaps that move the assortativity toward
/// target_rho. For each attempt two random edges (a,b), (c,d) are drawn and
/// the re-pairing {(a,c),(b,d)} or {(a,d),(b,c)} closest to the target is
/// applied, provided it is simple, strictly closer than the current value and
/// keeps the graph connected. The degree-ordered pairing of Xulvi-Brunet and
/// Sokolov is always one of the two candidates. max_steps bounds the number
/// of attempted swaps.
inline RewireResult rewire_to_assortativity(const Network& g, double target_rho, double tol,
                                            std::size_t max_steps, std::uint64_t seed) {
  if (!(target_rho >= -1.0 && target_rho <= 1.0) || !(tol >= 0.0)) {
    throw Error(Errc::InvalidParameter, "rewire target must lie in [-1,1] with tol >= 0");
  }
  if (g.edge_count() < 1) throw Error(Errc::EmptyGraph, "cannot rewire a graph without edges");

  const std::size_t n = g.size();
  std::vector<Edge> edges = g.edges();
  const double m = static_cast<double>(edges.size());
  std::vector<double> rem(n);
  for (NodeId x = 0; x < n; ++x) rem[x] = static_cast<double>(g.degree(x)) - 1.0;

  // Only sum_edges j*k changes under degree-preserving swaps.
  double mean = 0, second = 0, cross = 0;
  for (const auto& e : edges) {
    mean += rem[e.u] + rem[e.v];
    second += rem[e.u] * rem[e.u] + rem[e.v] * rem[e.v];
    cross += rem[e.u] * rem[e.v];
  }
  mean /= 2 * m;
  second /= 2 * m;
  const double var = second - mean * mean;
  const bool flat = var <= 1e-12 * (1.0 + second);
  auto rho_of = [&](double c) { return flat ? 0.0 : std::clamp((c / m - mean * mean) / var, -1.0, 1.0); };

  double rho = rho_of(cross);
  RewireResult result{g, rho, 0, 0};
  if (std::abs(rho - target_rho) <= tol) return result;

  auto adj = detail::adjacency_lists(n, edges);
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (const auto& e : edges) present.insert(detail::edge_key(e.u, e.v));
  auto unlink = [&](NodeId a, NodeId b) {
    std::erase(adj[a], b);
    std::erase(adj[b], a);
    present.erase(detail::edge_key(a, b));
  };
  auto link = [&](NodeId a, NodeId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    present.insert(detail::edge_key(a, b));
  };

  Rng rng = make_rng(seed, {0x72776972ULL});

  // Re-pairs edges i1, i2 as w = {w0-w1, w2-w3} if that keeps the graph simple
  // and connected.
  auto try_swap = [&](std::size_t i1, std::size_t i2, const std::array<NodeId, 4>& w) {
    if (present.contains(detail::edge_key(w[0], w[1])) || present.contains(detail::edge_key(w[2], w[3])))
      return false;
    const auto [a, b] = edges[i1];
    const auto [c, d] = edges[i2];
    unlink(a, b);
    unlink(c, d);
    link(w[0], w[1]);
    link(w[2], w[3]);
    if (!detail::adjacency_connected(adj)) {
      unlink(w[0], w[1]);
      unlink(w[2], w[3]);
      link(a, b);
      link(c, d);
      return false;
    }
    cross += rem[w[0]] * rem[w[1]] + rem[w[2]] * rem[w[3]] - rem[a] * rem[b] - rem[c] * rem[d];
    edges[i1] = {std::min(w[0], w[1]), std::max(w[0], w[1])};
    edges[i2] = {std::min(w[2], w[3]), std::max(w[2], w[3])};
    return true;
  };

  // Greedy descent on |rho - target|. When no swap has been accepted for a
  // while the search sits in a local optimum; a burst of random swaps moves
  // it elsewhere and the closest network seen is kept.
  const std::size_t stall_limit = std::max<std::size_t>(1000, 20 * edges.size());
  const std::size_t kick_size = std::max<std::size_t>(1, edges.size() / 50);
  std::vector<Edge> best_edges = edges;
  double best_rho = rho;
  std::size_t attempts = 0, accepted = 0, stalled = 0;
  if (!flat && edges.size() >= 2) {
    while (attempts < max_steps && std::abs(best_rho - target_rho) > tol) {
      ++attempts;
      const std::size_t i1 = uniform_index(rng, edges.size());
      const std::size_t i2 = uniform_index(rng, edges.size());
      const auto [a, b] = edges[i1];
      const auto [c, d] = edges[i2];
      if (i1 == i2 || a == c || a == d || b == c || b == d) continue;

      const std::array<std::array<NodeId, 4>, 2> options = {{{a, c, b, d}, {a, d, b, c}}};
      const double old_part = rem[a] * rem[b] + rem[c] * rem[d];
      std::array<double, 2> dist{};
      for (int o = 0; o < 2; ++o) {
        const auto& w = options[o];
        dist[o] = std::abs(rho_of(cross - old_part + rem[w[0]] * rem[w[1]] + rem[w[2]] * rem[w[3]]) - target_rho);
      }
      const double here = std::abs(rho - target_rho);
      const int first = dist[0] <= dist[1] ? 0 : 1;
      bool moved = false;
      for (int o : {first, 1 - first}) {
        if (dist[o] < here && try_swap(i1, i2, options[o])) {
          moved = true;
          break;
        }
      }
      if (moved) {
        rho = rho_of(cross);
        ++accepted;
        stalled = 0;
        if (std::abs(rho - target_rho) < std::abs(best_rho - target_rho)) {
          best_rho = rho;
          best_edges = edges;
        }
        continue;
      }
      if (++stalled < stall_limit) continue;
      stalled = 0;
      for (std::size_t k = 0; k < kick_size && attempts < max_steps; ++attempts) {
        const std::size_t j1 = uniform_index(rng, edges.size());
        const std::size_t j2 = uniform_index(rng, edges.size());
        const auto [p, q] = edges[j1];
        const auto [r, t] = edges[j2];
        if (j1 == j2 || p == r || p == t || q == r || q == t) continue;
        const std::array<NodeId, 4> w = (rng() & 1) ? std::array<NodeId, 4>{p, r, q, t}
                                                     : std::array<NodeId, 4>{p, t, q, r};
        if (try_swap(j1, j2, w)) ++k;
      }
      rho = rho_of(cross);
    }
  }
  if (std::abs(rho - target_rho) > std::abs(best_rho - target_rho)) {
    edges = std::move(best_edges);
    rho = best_rho;
  }

  result = RewireResult{Network(n, std::move(edges)), rho, attempts, accepted};
  // Report the exact value rather than the incrementally tracked one.
  result.rho = assortativity(result.network).rho;
  if (std::abs(result.rho - target_rho) > 2 * tol) {
    std::ostringstream msg;
    msg << "assortativity target " << target_rho << " not reached: achieved " << result.rho
        << " after " << attempts << " attempts";
    throw TargetUnreachable(msg.str(), std::move(result));
  }
  return result;
}

// ---------------------------------------------------------------------------
// File formats

/// One "u v" pair per line, 0-indexed, each undirected edge once.
inline void write_edge_list(std::ostream& os, const Network& g) {
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

/// Reads the edge-list format; blank lines and '#' comments are ignored. The
/// node count is max index + 1 unless node_count is given.
inline Network read_edge_list(std::istream& is, std::optional<std::size_t> node_count = std::nullopt) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0, n = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0) {
      throw Error(Errc::ParseError, "edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (node_count) {
    if (*node_count < n) throw Error(Errc::ParseError, "edge list references nodes beyond node_count");
    n = *node_count;
  }
  return Network(n, std::move(edges));
}

/// CSV with header "degree,count".
inline void write_degree_histogram_csv(std::ostream& os, const DegreeStats& stats) {
  os << "degree,count\n";
  for (const auto& [k, c] : stats.histogram) os << k << ',' << c << '\n';
}

}  // namespace netzd
