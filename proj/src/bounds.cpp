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

#include "discord/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {

namespace {

constexpr double kProbabilityFloor = 1e-14;
constexpr double kCoincidenceTolerance = 1e-7;

double xlog2x(double v) { return v > 0 ? v * std::log2(v) : 0.0; }

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

double h(double z) {
  if (z < -1e-12 || z > 1.0 + 1e-12) {
    throw Error(ErrorKind::DomainError, "h(z) needs z in [0, 1], got " +
                                            describe(z));
  }
  const double r = std::sqrt(std::clamp(z, 0.0, 1.0));
  return binary_entropy((1.0 + r) / 2.0);
}

double co(double z) {
  if (z <= -1.0) {
    throw Error(ErrorKind::DomainError,
                "co(z) diverges for z <= -1, got " + describe(z));
  }
  if (z >= 0.0) return h(z);
  return std::log2(2.0 / (1.0 + z));
}

ConditionalEvaluator::ConditionalEvaluator(const DensityMatrix& rho)
    : dim_b_(rho.dim_b()),
      blocks_(pauli_blocks(rho.matrix(), rho.dim_b())),
      entropy_a_(von_neumann_entropy(partial_trace(rho, Subsystem::A))),
      entropy_ab_(von_neumann_entropy(rho)) {
  if (dim_b_ == 2) {
    for (int mu = 0; mu < 4; ++mu) blocks2_[mu] = blocks_[mu];
  }
}

double ConditionalEvaluator::probability(const Vec4& c) const {
  double p = 0;
  for (int mu = 0; mu < 4; ++mu) p += c[mu] * blocks_[mu].trace().real();
  return p / 2.0;
}

double ConditionalEvaluator::member_cost(const Vec4& c,
                                         MemberCost cost) const {
  if (dim_b_ == 2) {
    Matrix2c m = c[0] * blocks2_[0];
    for (int mu = 1; mu < 4; ++mu) m += c[mu] * blocks2_[mu];
    m /= 2.0;
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double p = a + d;
    if (p < kProbabilityFloor) return 0.0;
    const double off2 = std::norm(m(0, 1));
    const double purity_p2 = a * a + d * d + 2 * off2;  // Tr M^2
    switch (cost) {
      case MemberCost::Entropy: {
        const double r = std::sqrt((a - d) * (a - d) / 4.0 + off2);
        const double l1 = std::max(0.0, p / 2.0 + r);
        const double l2 = std::max(0.0, p / 2.0 - r);
        return -xlog2x(l1) - xlog2x(l2) + xlog2x(p);
      }
      case MemberCost::Concurrence:
        return std::sqrt(std::max(0.0, 2.0 * (p * p - purity_p2)));
      case MemberCost::Tangle:
        return std::max(0.0, 2.0 * (p * p - purity_p2) / p);
    }
    return 0.0;
  }
  CMatrix m = c[0] * blocks_[0];
  for (int mu = 1; mu < 4; ++mu) m += c[mu] * blocks_[mu];
  m /= 2.0;
  const double p = m.trace().real();
  if (p < kProbabilityFloor) return 0.0;
  switch (cost) {
    case MemberCost::Entropy: {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
      double s = xlog2x(p);
      for (const double lambda : es.eigenvalues()) s -= xlog2x(lambda);
      return s;
    }
    case MemberCost::Concurrence:
    case MemberCost::Tangle: {
      const double tr2 = m.squaredNorm();
      const double gap = std::max(0.0, 2.0 * (p * p - tr2));
      return cost == MemberCost::Concurrence ? std::sqrt(gap) : gap / p;
    }
  }
  return 0.0;
}

double ConditionalEvaluator::ensemble_average(std::span<const Vec4> elements,
                                              MemberCost cost) const {
  double total = 0;
  for (const Vec4& c : elements) total += member_cost(c, cost);
  return total;
}

double ConditionalEvaluator::discord(std::span<const Vec4> elements) const {
  return ensemble_average(elements, MemberCost::Entropy) + entropy_a_ -
         entropy_ab_;
}

double ConditionalEvaluator::discord(const Vec3& m) const {
  const Vec3 n = m.normalized();
  const std::array<Vec4, 2> elements = {rank_one_coefficients(1.0, n),
                                        rank_one_coefficients(1.0, -n)};
  return discord(elements);
}

double ConditionalEvaluator::discord(const Povm& povm) const {
  const auto c = povm.coefficients();
  return discord(c);
}

double conditional_discord(const DensityMatrix& rho, const Vec3& m) {
  return ConditionalEvaluator(rho).discord(m);
}

double conditional_discord(const DensityMatrix& rho, const Povm& povm) {
  return ConditionalEvaluator(rho).discord(povm);
}

DiscordBounds compute_bounds(const DensityMatrix& rho) {
  DiscordBounds out;
  const CMatrix rho_a = partial_trace(rho, Subsystem::A);
  const CMatrix rho_b = partial_trace(rho, Subsystem::B);
  out.bloch = bloch_vector(rho_a);
  out.entropy_a = von_neumann_entropy(rho_a);
  out.entropy_b = von_neumann_entropy(rho_b);
  out.entropy_ab = von_neumann_entropy(rho);
  out.purity_b = (rho_b * rho_b).trace().real();

  out.spectrum = lorentz_spectrum(q_matrix(rho));
  out.l_value = 2.0 * out.purity_b - 1.0 + out.spectrum.q2();
  out.lower = co(out.l_value) + out.entropy_a - out.entropy_ab;

  const FilteredState filtered = filtered_state(rho);
  out.filtered_spectrum = lorentz_spectrum(q_matrix(filtered));
  out.direction = t1_direction(filtered, out.bloch);
  out.q2 = out.filtered_spectrum.q2();
  out.t1 = out.direction.t1;
  out.upper = ConditionalEvaluator(rho).discord(out.direction.m);

  if (rho.dim_b() == 2) {
    const double x2 = out.bloch.squaredNorm();
    const double tau = 2.0 * (1.0 - out.purity_b) - (1.0 - x2) * out.t1;
    out.upper_weak =
        h(std::clamp(1.0 - tau, 0.0, 1.0)) + out.entropy_a - out.entropy_ab;
    out.coincide = std::abs(out.q2 - out.t1) <=
                   kCoincidenceTolerance * std::max(1.0, out.t1);
  }
  return out;
}

double discord_lower(const DensityMatrix& rho) {
  const CMatrix rho_b = partial_trace(rho, Subsystem::B);
  const double l = 2.0 * (rho_b * rho_b).trace().real() - 1.0 +
                   lorentz_spectrum(q_matrix(rho)).q2();
  return co(l) + von_neumann_entropy(partial_trace(rho, Subsystem::A)) -
         von_neumann_entropy(rho);
}

double discord_upper(const DensityMatrix& rho) {
  const BlochVector x = bloch_vector(partial_trace(rho, Subsystem::A));
  const MeasurementDirection dir = t1_direction(filtered_state(rho), x);
  return conditional_discord(rho, dir.m);
}

double discord_upper_weak(const DensityMatrix& rho) {
  if (rho.dim_b() != 2) {
    throw Error(ErrorKind::WrongDimension,
                "weak upper bound is defined for two-qubit states only");
  }
  return *compute_bounds(rho).upper_weak;
}

double concurrence_bc_squared(const DensityMatrix& rho) {
  const CMatrix rho_b = partial_trace(rho, Subsystem::B);
  const double l = 2.0 * (rho_b * rho_b).trace().real() - 1.0 +
                   lorentz_spectrum(q_matrix(rho)).q2();
  return 1.0 - l;
}

double tangle_bc(const DensityMatrix& rho) {
  const CMatrix rho_b = partial_trace(rho, Subsystem::B);
  const BlochVector x = bloch_vector(partial_trace(rho, Subsystem::A));
  const double t1 = t1_direction(filtered_state(rho), x).t1;
  return 2.0 * (1.0 - (rho_b * rho_b).trace().real()) -
         (1.0 - x.squaredNorm()) * t1;
}

bool x_state_condition(const XStateParams& p) {
  const CMatrix m = x_state_matrix(p);
  const double lhs = std::abs(std::sqrt(std::max(0.0, m(0, 0).real() * m(3, 3).real())) -
                              std::sqrt(std::max(0.0, m(1, 1).real() * m(2, 2).real())));
  const double rhs = std::abs(m(0, 3).real()) + std::abs(m(1, 2).real());
  return lhs <= rhs + 1e-12;
}

double x_state_discord(const XStateParams& p) {
  if (!x_state_condition(p)) {
    throw Error(ErrorKind::ConditionViolated,
                "|sqrt(r00 r33) - sqrt(r11 r22)| > |r03| + |r12|");
  }
  const DensityMatrix rho = make_x_state(p);
  const DiscordBounds b = compute_bounds(rho);
  if (!b.coincide) {
    throw Error(ErrorKind::CoincidenceFailed,
                "q2(rho~) = " + describe(b.q2) + ", t1(rho~) = " +
                    describe(b.t1));
  }
  const auto clamped_h = [](double z) { return h(std::min(z, 1.0)); };
  // S(rho_X): the two 2x2 blocks carry weights (1 +- s3)/2.
  double s_x = binary_entropy((1.0 + p.s3) / 2.0);
  for (const double sign : {1.0, -1.0}) {
    const double w = 1.0 + sign * p.s3;
    if (w <= 1e-15) continue;
    const double num = (p.x + sign * p.y) * (p.x + sign * p.y) +
                       (p.s1 - sign * p.s2) * (p.s1 - sign * p.s2);
    s_x += w / 2.0 * clamped_h(num / (w * w));
  }
  const double smax2 = std::max(p.s1 * p.s1, p.s2 * p.s2);
  return clamped_h(p.y * p.y + smax2) + clamped_h(p.x * p.x) - s_x;
}

DqcParams dqc_params(const UnitaryMatrix& u, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::InvalidAlpha, "alpha = " + describe(alpha));
  }
  DqcParams p;
  p.d = u.dim();
  p.alpha = alpha;
  p.u1 = std::abs(u.matrix().trace()) / p.d;
  const Complex tr2 = (u.matrix() * u.matrix()).trace();
  p.beta = (p.d + std::abs(tr2)) / (2.0 * p.d);
  if (std::abs(tr2) > 1e-12) p.phase = std::arg(tr2) / 2.0;
  return p;
}

double dqc1_upper(const DqcParams& p) {
  const double a2 = p.alpha * p.alpha;
  return h(a2 * p.beta) - h(a2);
}

double dqc1_lower(const DqcParams& p) {
  if (p.u1 > 1e-9 || p.d < 4) {
    throw Error(ErrorKind::RegimeError,
                "closed-form lower bound needs u1 = 0 and d >= 4 (u1 = " +
                    describe(p.u1) + ", d = " + std::to_string(p.d) + ")");
  }
  const double a2 = p.alpha * p.alpha;
  return std::log2(2.0 / (1.0 + a2 * p.beta)) - h(a2);
}

DqcBounds dqc1_bounds(const DqcParams& p) {
  DqcBounds out;
  out.upper = dqc1_upper(p);
  if (p.u1 <= 1e-9 && p.d >= 4) out.lower = dqc1_lower(p);
  return out;
}

ChannelBounds accessible_info_bounds(double p1, const BlochVector& a,
                                     const BlochVector& b) {
  const DensityMatrix rho = make_binary_channel(p1, a, b);
  const double p2 = 1.0 - p1;
  ChannelBounds out;
  out.delta = p1 - p2;
  out.c_plus = p1 * a + p2 * b;
  out.c_minus = p1 * a - p2 * b;
  const double a2 = a.squaredNorm();
  const double b2 = b.squaredNorm();
  const double root = std::sqrt(std::max(0.0, (1 - a2) * (1 - b2)));
  out.lambda_plus = (1 - a.dot(b) + root) / 2;
  out.lambda_minus = (1 - a.dot(b) - root) / 2;

  const CMatrix rho_a = partial_trace(rho, Subsystem::A);
  const CMatrix rho_b = partial_trace(rho, Subsystem::B);
  out.holevo_chi = von_neumann_entropy(rho_a) - p1 * h(std::min(a2, 1.0)) -
                   p2 * h(std::min(b2, 1.0));

  const double l = 2.0 * (rho_b * rho_b).trace().real() - 1.0 +
                   lorentz_spectrum(q_matrix(rho)).q2();
  out.upper = binary_entropy(p1) - co(l);

  const BlochVector x = bloch_vector(rho_a);
  try {
    out.optimal_direction = t1_direction(filtered_state(rho), x).m;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMarginal) throw;
    // rho_A pure: both signals equal the same pure state, any axis works.
    out.optimal_direction = x.normalized();
  }
  out.lower =
      out.holevo_chi - ConditionalEvaluator(rho).discord(out.optimal_direction);
  out.coincide = std::abs(p1 * p1 * (1 - a2) - p2 * p2 * (1 - b2)) <= 1e-9;
  return out;
}

}  // namespace discord
