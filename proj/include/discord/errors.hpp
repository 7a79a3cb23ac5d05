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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace discord {

enum class ErrorKind {
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  NotUnitary,
  InvalidRank,
  InvalidAlpha,
  InvalidProbability,
  InvalidBlochLength,
  SingularFilter,
  SingularMarginal,
  DimensionTooLarge,
  WrongDimension,
  ComplexSpectrum,
  DomainError,
  InvalidPovm,
  ConditionViolated,
  CoincidenceFailed,
  RegimeError,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can branch on it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace discord
