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

#include "discord/families.hpp"

#include <cmath>
#include <random>

#include "discord/bounds.hpp"

namespace discord {

namespace {

Vec3 random_direction(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(gen), normal(gen), normal(gen));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace

DensityMatrix random_bell_diagonal(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double c1 = u(gen), c2 = u(gen), c3 = u(gen);
    if (1 - c1 - c2 - c3 >= 0 && 1 - c1 + c2 + c3 >= 0 &&
        1 + c1 - c2 + c3 >= 0 && 1 + c1 + c2 - c3 >= 0) {
      return make_bell_diagonal(c1, c2, c3);
    }
  }
}

XStateParams random_coincident_x_params(std::uint64_t seed, bool zero_x) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    XStateParams p{zero_x ? 0.0 : u(gen), u(gen), u(gen), u(gen), u(gen)};
    const CMatrix m = x_state_matrix(p);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    // Keep away from the boundary so rho_A stays invertible.
    if (es.eigenvalues().minCoeff() < 1e-6 || std::abs(p.x) > 0.999) continue;
    if (!x_state_condition(p)) continue;
    return p;
  }
}

Matrix2c random_hermitian_filter(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Matrix2c f;
    f(0, 0) = normal(gen);
    f(1, 1) = normal(gen);
    f(0, 1) = Complex(normal(gen), normal(gen));
    f(1, 0) = std::conj(f(0, 1));
    if (std::abs(f.determinant()) >= 0.05) return f;
  }
}

DensityMatrix random_filtered_coincident_state(std::uint64_t seed) {
  const DensityMatrix base =
      seed % 2 == 0 ? make_x_state(random_coincident_x_params(seed, true))
                    : random_bell_diagonal(seed);
  return apply_filter(base, random_hermitian_filter(seed ^ 0xf1f1f1f1ULL));
}

BinaryChannel random_coincident_channel(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double p1 = 0.1 + 0.8 * u(gen);
    const double p2 = 1.0 - p1;
    const double ra = std::sqrt(u(gen));
    const double b2 = 1.0 - p1 * p1 * (1.0 - ra * ra) / (p2 * p2);
    if (b2 < 0.0) continue;
    BinaryChannel c;
    c.p1 = p1;
    c.a = ra * random_direction(gen);
    c.b = std::sqrt(b2) * random_direction(gen);
    // Nearly identical pure signals leave rho_A singular.
    if ((c.a - c.b).norm() < 1e-3) continue;
    return c;
  }
}

BinaryChannel pure_channel(double theta) {
  BinaryChannel c;
  c.p1 = 0.5;
  c.a = Vec3(std::sin(theta / 2), 0.0, std::cos(theta / 2));
  c.b = Vec3(-std::sin(theta / 2), 0.0, std::cos(theta / 2));
  return c;
}

}  // namespace discord
