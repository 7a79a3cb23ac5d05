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

#include <array>

#include "discord/qstate.hpp"

namespace discord {

/// The Minkowski metric diag(1, -1, -1, -1).
const Mat4& eta();

/// rho~ = (2 rho_A)^{-1/2} rho (2 rho_A)^{-1/2}, with the filter acting on A
/// only. Its A-marginal is sigma_0 / 2 but its trace need not be one, so it
/// is kept apart from DensityMatrix.
struct FilteredState {
  CMatrix matrix;
  int dim_b = 0;
};

/// Real symmetric 4x4 coefficients of 2 Tr_{B1B2}[(1 - V) rho (x) rho]
/// = (1/4) sum Q_{mu nu} sigma_mu (x) sigma_nu.
struct QMatrix {
  Mat4 entries = Mat4::Zero();
};

/// Solutions q1 >= q2 >= q3 >= q4 of det(Q - q eta) = 0.
struct LorentzSpectrum {
  std::array<double, 4> q{};

  double q1() const { return q[0]; }
  double q2() const { return q[1]; }
};

/// The measurement direction m built from the principal eigenvector e of
/// the 3x3 block of -Q(rho~) and the A Bloch vector.
struct MeasurementDirection {
  Vec3 m = Vec3::UnitZ();
  double t1 = 0;
  Vec3 e = Vec3::UnitZ();
};

/// Smallest admissible eigenvalue of rho_A for the filter.
inline constexpr double kMarginalFloor = 1e-10;

FilteredState filtered_state(const DensityMatrix& rho);

/// Production path: Q_{mu nu} = 2 [Tr B_mu Tr B_nu - Tr(B_mu B_nu)] with
/// B_mu = Tr_A[(sigma_mu (x) 1) rho].
QMatrix q_matrix(const CMatrix& op, int dim_b);
QMatrix q_matrix(const DensityMatrix& rho);
QMatrix q_matrix(const FilteredState& filtered);

/// Literal construction through the d^2 x d^2 swap operator. Test oracle
/// only; throws DimensionTooLarge for d > 64.
QMatrix q_matrix_swap_reference(const CMatrix& op, int dim_b);
QMatrix q_matrix_swap_reference(const DensityMatrix& rho);

/// [R]_{mu nu} = <sigma_mu (x) sigma_nu>. Two-qubit operators only.
Mat4 r_matrix(const CMatrix& op, int dim_b);
Mat4 r_matrix(const DensityMatrix& rho);

/// [T]_{ab} = <sigma_a (x) sigma_b>_{rho~}, a, b = 1..3.
Mat3 t_matrix(const FilteredState& filtered);

/// Eigenvalues of eta Q, sorted descending. Throws ComplexSpectrum when an
/// imaginary part exceeds 1e-8.
LorentzSpectrum lorentz_spectrum(const QMatrix& q);

MeasurementDirection t1_direction(const FilteredState& filtered,
                                  const BlochVector& x);

}  // namespace discord
