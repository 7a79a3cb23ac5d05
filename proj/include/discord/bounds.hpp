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

#include <optional>
#include <span>

#include "discord/correlation.hpp"
#include "discord/measurement.hpp"
#include "discord/qstate.hpp"

namespace discord {

/// Binary entropy of (1 + sqrt z)/2. z is clamped from [-1e-12, 1 + 1e-12];
/// anything further out throws DomainError.
double h(double z);

/// h(z) for z >= 0 and log2(2 / (1 + z)) for z <= 0. Throws DomainError for
/// z <= -1.
double co(double z);

/// Per-member cost of an ensemble of conditional B states.
enum class MemberCost {
  Entropy,      // S(pi_B)
  Concurrence,  // sqrt(2 (1 - Tr pi_B^2))
  Tangle,       // 2 (1 - Tr pi_B^2)
};

/// Evaluates measurement-conditioned quantities of one state. The blocks
/// B_mu = Tr_A[(sigma_mu (x) 1) rho] are computed once, after which the
/// unnormalized conditional state for an element with Pauli coefficients c
/// is sum_mu c_mu B_mu / 2.
class ConditionalEvaluator {
 public:
  explicit ConditionalEvaluator(const DensityMatrix& rho);

  /// D_A(rho | m) for the projective measurement along m (need not be unit).
  double discord(const Vec3& m) const;
  double discord(std::span<const Vec4> elements) const;
  double discord(const Povm& povm) const;

  /// sum_i p_i cost(rho_{B|i}); outcomes with p_i < 1e-14 contribute 0.
  double ensemble_average(std::span<const Vec4> elements,
                          MemberCost cost) const;

  /// Probabilities Tr(E_i rho).
  double probability(const Vec4& element) const;

  double entropy_a() const noexcept { return entropy_a_; }
  double entropy_ab() const noexcept { return entropy_ab_; }
  int dim_b() const noexcept { return dim_b_; }

 private:
  double member_cost(const Vec4& c, MemberCost cost) const;

  int dim_b_;
  std::array<CMatrix, 4> blocks_;
  std::array<Matrix2c, 4> blocks2_;
  double entropy_a_;
  double entropy_ab_;
};

double conditional_discord(const DensityMatrix& rho, const Vec3& m);
double conditional_discord(const DensityMatrix& rho, const Povm& povm);

struct DiscordBounds {
  double lower = 0;
  double upper = 0;
  /// h(1 - tau_BC) + S(rho_A) - S(rho); two-qubit states only.
  std::optional<double> upper_weak;
  bool coincide = false;
  MeasurementDirection direction;
  double l_value = 0;
  LorentzSpectrum spectrum;           // of rho
  LorentzSpectrum filtered_spectrum;  // of rho~
  double q2 = 0;                      // q2(rho~)
  double t1 = 0;                      // t1(rho~)
  BlochVector bloch = BlochVector::Zero();
  double entropy_a = 0;
  double entropy_b = 0;
  double entropy_ab = 0;
  double purity_b = 0;

  double lower_clamped() const { return lower > 0 ? lower : 0.0; }
};

/// co(2 Tr rho_B^2 - 1 + q2(rho)) + S(rho_A) - S(rho). Not clamped.
double discord_lower(const DensityMatrix& rho);
/// D_A(rho | m) at the direction built from rho~.
double discord_upper(const DensityMatrix& rho);
double discord_upper_weak(const DensityMatrix& rho);

/// Throws SingularMarginal when rho_A is not invertible.
DiscordBounds compute_bounds(const DensityMatrix& rho);

/// 1 - L, the squared concurrence of rho_BC.
double concurrence_bc_squared(const DensityMatrix& rho);
/// 2 (1 - Tr rho_B^2) - (1 - x^2) t1(rho~).
double tangle_bc(const DensityMatrix& rho);

/// Closed-form discord of an X-state satisfying
/// |sqrt(r00 r33) - sqrt(r11 r22)| <= |r03| + |r12|. Throws
/// ConditionViolated when that fails and CoincidenceFailed when the
/// numerical q2(rho~) = t1(rho~) check does not hold.
double x_state_discord(const XStateParams& p);

/// Whether the X-state condition above holds for the given parameters.
bool x_state_condition(const XStateParams& p);

struct DqcParams {
  int d = 1;
  double alpha = 0;
  double u1 = 0;    // |Tr U| / d
  double beta = 1;  // (d + |Tr U^2|) / (2d)
  /// phi with e^{2 i phi} = Tr U^2 / |Tr U^2|, when Tr U^2 != 0.
  std::optional<double> phase;
};

DqcParams dqc_params(const UnitaryMatrix& u, double alpha);

struct DqcBounds {
  /// Present only for u1 <= 1e-9 and d >= 4.
  std::optional<double> lower;
  double upper = 0;
};

/// log2(2 / (1 + alpha^2 beta)) - h(alpha^2). Throws RegimeError unless
/// u1 <= 1e-9 and d >= 4.
double dqc1_lower(const DqcParams& p);
/// h(alpha^2 beta) - h(alpha^2); valid for every U.
double dqc1_upper(const DqcParams& p);
DqcBounds dqc1_bounds(const DqcParams& p);

struct ChannelBounds {
  double holevo_chi = 0;
  double upper = 0;
  double lower = 0;
  bool coincide = false;
  Vec3 optimal_direction = Vec3::UnitZ();
  double lambda_plus = 0;
  double lambda_minus = 0;
  double delta = 0;
  Vec3 c_plus = Vec3::Zero();
  Vec3 c_minus = Vec3::Zero();
};

/// Bounds on the accessible information of the binary qubit channel
/// {(p1, a), (1 - p1, b)}.
ChannelBounds accessible_info_bounds(double p1, const BlochVector& a,
                                     const BlochVector& b);

}  // namespace discord
