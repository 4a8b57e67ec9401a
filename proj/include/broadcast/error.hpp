// Copyright 2026 The Broadcast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BROADCAST_ERROR_HPP
#define BROADCAST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace broadcast {

enum class Errc {
  NonSquare,
  NegativeEntry,
  NonzeroDiagonal,
  TooFewTeams,
  SameTeam,
  LengthMismatch,
  NotBijective,
  BadTeamIndex,
  DimensionMismatch,
  ParamOutOfRange,
  ConstraintViolated,
  HypothesisNotMet,
  NotPairwiseAxiom,
  InvalidInstance,
  FixedSizeMismatch,
  ParseError,
  UnknownRule,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::TooFewTeams: return "TooFewTeams";
    case Errc::SameTeam: return "SameTeam";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotBijective: return "NotBijective";
    case Errc::BadTeamIndex: return "BadTeamIndex";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::NotPairwiseAxiom: return "NotPairwiseAxiom";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::FixedSizeMismatch: return "FixedSizeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownRule: return "UnknownRule";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message always starts with the
/// code name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace broadcast

#endif  // BROADCAST_ERROR_HPP
