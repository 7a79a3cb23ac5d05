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

#include <span>
#include <vector>

#include "discord/qstate.hpp"

namespace discord {

using Vec4 = Eigen::Vector4d;

/// A POVM on the qubit: positive 2x2 operators summing to the identity.
class Povm {
 public:
  /// Throws InvalidPovm unless every element is PSD and the sum is the
  /// identity, both within 1e-9.
  static Povm validated(std::vector<Matrix2c> elements);

  /// {(1 + m.sigma)/2, (1 - m.sigma)/2} for a unit vector m.
  static Povm projective(const Vec3& m);

  const std::vector<Matrix2c>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Pauli coefficients (Tr E sigma_0, ..., Tr E sigma_3) of each element.
  std::vector<Vec4> coefficients() const;

 private:
  explicit Povm(std::vector<Matrix2c> elements)
      : elements_(std::move(elements)) {}
  std::vector<Matrix2c> elements_;
};

/// Pauli coefficients of w (sigma_0 + n.sigma) / 2 for a unit n, i.e.
/// (w, w n).
inline Vec4 rank_one_coefficients(double weight, const Vec3& n) {
  return Vec4(weight, weight * n[0], weight * n[1], weight * n[2]);
}

/// Closes a list of element coefficients into a POVM by appending
/// I - sum(elements). Returns false when the closing element is not PSD.
bool close_povm(std::vector<Vec4>& coefficients);

Matrix2c element_from_coefficients(const Vec4& c);

}  // namespace discord
