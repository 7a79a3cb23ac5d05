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

#include <cstdint>

#include "discord/qstate.hpp"

namespace discord {

// Seeded generators for the state families whose bounds coincide.

/// Uniform over the Bell-diagonal tetrahedron.
DensityMatrix random_bell_diagonal(std::uint64_t seed);

/// Random canonical X-state parameters with a PSD matrix that satisfies
/// |sqrt(r00 r33) - sqrt(r11 r22)| <= |r03| + |r12|. With `zero_x` the A
/// marginal is maximally mixed.
XStateParams random_coincident_x_params(std::uint64_t seed, bool zero_x);

/// F rho F^dagger / N for a random invertible Hermitian F on A and a base
/// state with maximally mixed A marginal and coincident bounds (an X-state
/// with x = 0 or a Bell-diagonal state).
DensityMatrix random_filtered_coincident_state(std::uint64_t seed);

/// Random invertible Hermitian 2x2 filter with |det F| >= 0.05.
Matrix2c random_hermitian_filter(std::uint64_t seed);

struct BinaryChannel {
  double p1 = 0.5;
  BlochVector a = BlochVector::Zero();
  BlochVector b = BlochVector::Zero();
};

/// Channel with p1^2 (1 - a^2) = p2^2 (1 - b^2).
BinaryChannel random_coincident_channel(std::uint64_t seed);

/// Equal-prior pure states at Bloch angle theta.
BinaryChannel pure_channel(double theta);

}  // namespace discord
