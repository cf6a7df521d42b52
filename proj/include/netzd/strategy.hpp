#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netzd/error.hpp"

namespace netzd {

/// Joint outcome of one prisoner's dilemma round, seen from the focal player
/// (first letter) against the opponent (second letter).
enum class Outcome : std::uint8_t { CC = 0, CD = 1, DC = 2, DD = 3 };

inline constexpr std::array<Outcome, 4> kAllOutcomes = {Outcome::CC, Outcome::CD, Outcome::DC,
                                                        Outcome::DD};

constexpr Outcome swap_perspective(Outcome o) noexcept {
  switch (o) {
    case Outcome::CD: return Outcome::DC;
    case Outcome::DC: return Outcome::CD;
    default: return o;
  }
}

constexpr Outcome make_outcome(bool focal_cooperates, bool other_cooperates) noexcept {
  return static_cast<Outcome>((focal_cooperates ? 0 : 2) | (other_cooperates ? 0 : 1));
}

constexpr std::size_t index_of(Outcome o) noexcept { return static_cast<std::size_t>(o); }

constexpr std::string_view outcome_name(Outcome o) noexcept {
  constexpr std::array<std::string_view, 4> names = {"CC", "CD", "DC", "DD"};
  return names[index_of(o)];
}

/// Prisoner's dilemma payoffs. Construction enforces T > R > P > S.
class PayoffMatrix {
 public:
  PayoffMatrix() : PayoffMatrix(5.0, 3.0, 1.0, 0.0) {}

  PayoffMatrix(double t, double r, double p, double s) : t_(t), r_(r), p_(p), s_(s) {
    if (!(std::isfinite(t) && std::isfinite(r) && std::isfinite(p) && std::isfinite(s)) ||
        !(t > r && r > p && p > s)) {
      throw Error(Errc::InvalidPayoffs, "payoff matrix must satisfy T > R > P > S");
    }
  }

  double t() const noexcept { return t_; }
  double r() const noexcept { return r_; }
  double p() const noexcept { return p_; }
  double s() const noexcept { return s_; }

  /// Focal player's payoff for each outcome, indexed CC, CD, DC, DD.
  std::array<double, 4> focal_payoffs() const noexcept { return {r_, s_, t_, p_}; }

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  double t_, r_, p_, s_;
};

inline std::pair<double, double> round_payoffs(Outcome o, const PayoffMatrix& m) noexcept {
  switch (o) {
    case Outcome::CC: return {m.r(), m.r()};
    case Outcome::CD: return {m.s(), m.t()};
    case Outcome::DC: return {m.t(), m.s()};
    case Outcome::DD: return {m.p(), m.p()};
  }
  return {0.0, 0.0};
}

/// Memory-one strategy: probability of cooperating after each previous joint
/// outcome with the same opponent.
class MemoryOneStrategy {
 public:
  MemoryOneStrategy(std::array<double, 4> probs, std::string label)
      : probs_(probs), label_(std::move(label)) {
    for (double p : probs_) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(Errc::InvalidProbability,
                    "strategy '" + label_ + "' has a cooperation probability outside [0,1]");
      }
    }
  }

  MemoryOneStrategy(double p1, double p2, double p3, double p4, std::string label)
      : MemoryOneStrategy(std::array<double, 4>{p1, p2, p3, p4}, std::move(label)) {}

  double p1() const noexcept { return probs_[0]; }
  double p2() const noexcept { return probs_[1]; }
  double p3() const noexcept { return probs_[2]; }
  double p4() const noexcept { return probs_[3]; }

  double coop_prob(Outcome previous) const noexcept { return probs_[index_of(previous)]; }
  const std::array<double, 4>& probs() const noexcept { return probs_; }
  const std::string& label() const noexcept { return label_; }

  bool same_probs(const MemoryOneStrategy& other) const noexcept { return probs_ == other.probs_; }

 private:
  std::array<double, 4> probs_;
  std::string label_;
};

/// The p2 and p3 that make (p1, ., ., p4) a zero-determinant strategy.
inline std::pair<double, double> zd_conditionals(double p1, double p4, const PayoffMatrix& m) noexcept {
  const double t = m.t(), r = m.r(), p = m.p(), s = m.s();
  const double p2 = (p1 * (t - p) - (1.0 + p4) * (t - r)) / (r - p);
  const double p3 = ((1.0 - p1) * (p - s) + p4 * (r - s)) / (r - p);
  return {p2, p3};
}

inline MemoryOneStrategy zd_complete(double p1, double p4, const PayoffMatrix& m,
                                     std::string label = "zd") {
  if (!(p1 >= 0.0 && p1 <= 1.0 && p4 >= 0.0 && p4 <= 1.0)) {
    throw Error(Errc::InvalidProbability, "zd_complete: p1 and p4 must lie in [0,1]");
  }
  auto [p2, p3] = zd_conditionals(p1, p4, m);
  // Values a rounding error outside [0,1] (e.g. p1 = 1, p4 = 0) are snapped back.
  constexpr double kSlack = 1e-12;
  if (!(p2 >= -kSlack && p2 <= 1.0 + kSlack && p3 >= -kSlack && p3 <= 1.0 + kSlack)) {
    throw Error(Errc::InfeasibleZD, "zd_complete: (p1=" + std::to_string(p1) +
                                        ", p4=" + std::to_string(p4) +
                                        ") gives p2=" + std::to_string(p2) +
                                        ", p3=" + std::to_string(p3) + " outside [0,1]");
  }
  return MemoryOneStrategy({p1, std::clamp(p2, 0.0, 1.0), std::clamp(p3, 0.0, 1.0), p4}, std::move(label));
}

/// Long-run payoff any opponent receives against a ZD strategy with the given
/// p1, p4 (independent of the opponent).
inline double zd_opponent_payoff(double p1, double p4, const PayoffMatrix& m) noexcept {
  return ((1.0 - p1) * m.p() + p4 * m.r()) / (1.0 - p1 + p4);
}

inline constexpr double kZdDefaultP1 = 0.99;
inline constexpr double kZdDefaultP4 = 0.01;

inline const std::vector<std::string_view>& strategy_names() {
  static const std::vector<std::string_view> names = {
      "pavlov", "general_cooperator", "cooperator", "defector", "tit_for_tat", "zd_default"};
  return names;
}

/// Catalog lookup. zd_default is completed against the default (5,3,1,0)
/// matrix regardless of the matrix a simulation later uses.
inline MemoryOneStrategy named_strategy(std::string_view name) {
  const std::string label(name);
  if (name == "pavlov") return MemoryOneStrategy(1, 0, 0, 1, label);
  if (name == "general_cooperator") return MemoryOneStrategy(0.935, 0.229, 0.266, 0.42, label);
  if (name == "cooperator") return MemoryOneStrategy(1, 1, 1, 1, label);
  if (name == "defector") return MemoryOneStrategy(0, 0, 0, 0, label);
  if (name == "tit_for_tat") return MemoryOneStrategy(1, 1, 0, 0, label);
  if (name == "zd_default") return zd_complete(kZdDefaultP1, kZdDefaultP4, PayoffMatrix{}, label);
  throw Error(Errc::UnknownStrategy, "unknown strategy '" + label + "'");
}

}  // namespace netzd
