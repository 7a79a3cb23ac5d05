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
#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace discord {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Bloch vector of a qubit: rho = (sigma_0 + x . sigma) / 2.
using BlochVector = Vec3;

/// Validation tolerance shared by all density-matrix invariants.
inline constexpr double kStateTolerance = 1e-9;

/// sigma_0 .. sigma_3.
const std::array<Matrix2c, 4>& pauli();

/// A validated qubit-qudit density matrix on C^2 (x) C^d, basis |a>|b> with
/// the qubit index slowest. Immutable after construction.
class DensityMatrix {
 public:
  /// Checks Hermiticity, unit trace and positivity (all within 1e-9).
  /// Throws Error{NotHermitian|NotUnitTrace|NotPositive|WrongDimension}.
  static DensityMatrix validated(CMatrix entries, int dim_b);

  const CMatrix& matrix() const noexcept { return entries_; }
  int dim_a() const noexcept { return 2; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return 2 * dim_b_; }

  /// Tr rho^2.
  double purity() const;

 private:
  DensityMatrix(CMatrix entries, int dim_b)
      : entries_(std::move(entries)), dim_b_(dim_b) {}

  CMatrix entries_;
  int dim_b_;
};

/// A d x d unitary acting on the qudit. Checked to 1e-9 elementwise.
class UnitaryMatrix {
 public:
  static UnitaryMatrix validated(CMatrix entries);

  const CMatrix& matrix() const noexcept { return entries_; }
  int dim() const noexcept { return static_cast<int>(entries_.rows()); }

 private:
  explicit UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {}
  CMatrix entries_;
};

/// Correlation-matrix parameters of a real canonical two-qubit X-state.
struct XStateParams {
  double x = 0;   // <sigma_3 (x) sigma_0>
  double y = 0;   // <sigma_0 (x) sigma_3>
  double s1 = 0;  // <sigma_a (x) sigma_a>, a = 1, 2, 3
  double s2 = 0;
  double s3 = 0;
};

enum class Subsystem { A, B };

// -- elementary functionals ------------------------------------------------

/// Reduced matrix of the kept subsystem (2x2 for A, d x d for B).
CMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);
CMatrix partial_trace(const CMatrix& op, int dim_b, Subsystem keep);

/// Tr_A[(sigma_mu (x) 1) op] for mu = 0..3.
std::array<CMatrix, 4> pauli_blocks(const CMatrix& op, int dim_b);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0] are clamped to 0;
/// anything more negative throws NotPositive.
double von_neumann_entropy(const CMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy (bits) of a probability vector, 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// Binary entropy H2(p) in bits.
double binary_entropy(double p);

BlochVector bloch_vector(const CMatrix& rho_a);
CMatrix qubit_from_bloch(const BlochVector& x);

// -- constructors -----------------------------------------------------------

/// rho = G G^dagger / Tr(G G^dagger), G a (2d x rank) complex Ginibre matrix
/// drawn from a generator seeded with `seed`.
DensityMatrix random_state(int dim_b, int rank, std::uint64_t seed);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
UnitaryMatrix random_unitary(int dim, std::uint64_t seed);

/// Random unitary with Tr U = 0: eigenphases come in pairs (phi, phi + pi)
/// in a Haar-random eigenbasis. `dim` must be even.
UnitaryMatrix random_traceless_unitary(int dim, std::uint64_t seed);

DensityMatrix make_bell_diagonal(double c1, double c2, double c3);
DensityMatrix make_x_state(const XStateParams& p);
/// The X-state matrix without the positivity check.
CMatrix x_state_matrix(const XStateParams& p);
/// <sigma_3 1>, <1 sigma_3>, <sigma_a sigma_a> of a two-qubit state.
XStateParams x_state_expectations(const DensityMatrix& rho);

/// (1/2d) [[1, alpha U^dagger], [alpha U, 1]].
DensityMatrix make_dqc1(const UnitaryMatrix& u, double alpha);

/// p1 rho_a (x) |1><1| + p2 rho_b (x) |2><2|, A the signal qubit.
DensityMatrix make_binary_channel(double p1, const BlochVector& a,
                                  const BlochVector& b);

/// (F (x) 1) rho (F (x) 1)^dagger, renormalized. Throws SingularFilter when
/// |det F| <= 1e-12.
DensityMatrix apply_filter(const DensityMatrix& rho, const Matrix2c& filter);

/// (V_A (x) V_B) rho (V_A (x) V_B)^dagger.
DensityMatrix conjugate_local(const DensityMatrix& rho, const CMatrix& va,
                              const CMatrix& vb);

/// sum_i |psi_i>_AB |i>_C with C of dimension 2d (C index fastest).
CVector purify(const DensityMatrix& rho);

/// Tr_C |psi><psi| for a vector on A (x) B (x) C with dim(AB) = dim_ab.
CMatrix trace_out_last(const CVector& psi, int dim_ab);

}  // namespace discord
