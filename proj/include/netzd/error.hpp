#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netzd {

enum class Errc {
  InvalidPayoffs,
  InvalidProbability,
  InfeasibleZD,
  UnknownStrategy,
  InfeasibleDegree,
  InvalidParameter,
  EmptyGraph,
  TargetUnreachable,
  IsolatedNode,
  UnknownPreset,
  DegenerateInput,
  ParseError,
  IoError,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidPayoffs: return "InvalidPayoffs";
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::InfeasibleZD: return "InfeasibleZD";
    case Errc::UnknownStrategy: return "UnknownStrategy";
    case Errc::InfeasibleDegree: return "InfeasibleDegree";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::TargetUnreachable: return "TargetUnreachable";
    case Errc::IsolatedNode: return "IsolatedNode";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

// All library failures are reported through this type; code() identifies the
// failure class so callers (and the CLI's error line) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace netzd
