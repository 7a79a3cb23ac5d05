// Copyright 2026 The discord-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discord/errors.hpp"

namespace discord {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::InvalidBlochLength: return "InvalidBlochLength";
    case ErrorKind::SingularFilter: return "SingularFilter";
    case ErrorKind::SingularMarginal: return "SingularMarginal";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidPovm: return "InvalidPovm";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::CoincidenceFailed: return "CoincidenceFailed";
    case ErrorKind::RegimeError: return "RegimeError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace discord
