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

#include "discord/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "discord/direct_search.hpp"
#include "discord/errors.hpp"

namespace discord {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kThetaSteps = 60;
constexpr int kPhiSteps = 120;
constexpr int kRefinements = 8;
constexpr int kStarts = 16;
constexpr double kTieTolerance = 1e-12;

Vec3 sphere_point(double theta, double phi) {
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
              std::cos(theta));
}

using ElementCost = std::function<double(std::span<const Vec4>)>;

struct Candidate {
  double value = kInf;
  std::vector<Vec4> elements;
  int evaluations = 0;
  bool converged = true;

  void absorb(double v, std::vector<Vec4> e) {
    if (v < value - kTieTolerance) {
      value = v;
      elements = std::move(e);
    }
  }
};

std::array<Vec4, 2> projective_elements(const Vec3& m) {
  return {rank_one_coefficients(1.0, m), rank_one_coefficients(1.0, -m)};
}

Candidate search_projective(const ElementCost& cost) {
  const double dtheta = (std::numbers::pi / 2) / (kThetaSteps - 1);
  const double dphi = 2 * std::numbers::pi / kPhiSteps;
  struct GridPoint {
    double value;
    double theta;
    double phi;
  };
  std::vector<GridPoint> grid;
  grid.reserve(kThetaSteps * kPhiSteps);
  for (int i = 0; i < kThetaSteps; ++i) {
    for (int j = 0; j < kPhiSteps; ++j) {
      const double theta = i * dtheta;
      const double phi = j * dphi;
      grid.push_back({cost(projective_elements(sphere_point(theta, phi))),
                      theta, phi});
    }
  }
  Candidate out;
  out.evaluations = static_cast<int>(grid.size());
  std::partial_sort(grid.begin(), grid.begin() + kRefinements, grid.end(),
                    [](const GridPoint& a, const GridPoint& b) {
                      return a.value < b.value;
                    });
  const auto objective = [&](const std::vector<double>& p) {
    return cost(projective_elements(sphere_point(p[0], p[1])));
  };
  SearchOptions opt;
  opt.initial_step = {dtheta, dphi};
  opt.tolerance = 1e-6;
  for (int k = 0; k < kRefinements; ++k) {
    const SearchResult r =
        nelder_mead(objective, {grid[k].theta, grid[k].phi}, opt);
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
    const auto e = projective_elements(sphere_point(r.x[0], r.x[1]));
    out.absorb(r.value, {e.begin(), e.end()});
  }
  return out;
}

/// Parameters (w_i, theta_i, phi_i) for the first n-1 elements.
std::vector<Vec4> elements_from_params(const std::vector<double>& p) {
  std::vector<Vec4> e;
  e.reserve(p.size() / 3 + 1);
  for (std::size_t i = 0; i + 2 < p.size(); i += 3) {
    if (p[i] < 0.0) return {};
    e.push_back(rank_one_coefficients(p[i], sphere_point(p[i + 1], p[i + 2])));
  }
  if (!close_povm(e)) return {};
  return e;
}

std::vector<double> params_from(const std::vector<std::pair<double, Vec3>>& e) {
  std::vector<double> p;
  for (const auto& [w, n] : e) {
    const Vec3 u = n.normalized();
    p.push_back(w);
    p.push_back(std::acos(std::clamp(u[2], -1.0, 1.0)));
    p.push_back(std::atan2(u[1], u[0]));
  }
  return p;
}

Mat3 random_rotation(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat3 g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g(i, j) = normal(gen);
  }
  Eigen::HouseholderQR<Mat3> qr(g);
  Mat3 q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

/// Seeds: one start hugging the best projective measurement, the rest
/// randomly rotated regular (trine / tetrahedral) POVMs.
std::vector<std::vector<double>> povm_starts(int n, const Vec3& projective,
                                             std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<std::vector<double>> starts;
  constexpr double eps = 0.02;
  {
    std::vector<std::pair<double, Vec3>> e = {{1 - eps, projective},
                                              {1 - eps, -projective}};
    if (n == 4) e.push_back({eps, random_rotation(gen).col(0)});
    starts.push_back(params_from(e));
  }
  std::vector<Vec3> regular;
  if (n == 3) {
    for (int k = 0; k < 3; ++k) {
      const double a = 2 * std::numbers::pi * k / 3;
      regular.emplace_back(std::cos(a), std::sin(a), 0.0);
    }
  } else {
    const double s = 1.0 / std::sqrt(3.0);
    regular = {Vec3(s, s, s), Vec3(s, -s, -s), Vec3(-s, s, -s), Vec3(-s, -s, s)};
  }
  while (static_cast<int>(starts.size()) < kStarts) {
    const Mat3 rot = random_rotation(gen);
    std::vector<std::pair<double, Vec3>> e;
    for (int k = 0; k + 1 < n; ++k) {
      e.push_back({2.0 / n * (1.0 + jitter(gen)), rot * regular[k]});
    }
    starts.push_back(params_from(e));
  }
  return starts;
}

Candidate search_povm(const ElementCost& cost, int n, const Vec3& projective,
                      std::uint64_t seed) {
  Candidate out;
  const auto objective = [&](const std::vector<double>& p) {
    const auto e = elements_from_params(p);
    return e.empty() ? kInf : cost(e);
  };
  SearchOptions opt;
  opt.tolerance = 1e-6;
  opt.max_evaluations = 4000 * n;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
    opt.initial_step.insert(opt.initial_step.end(), {0.1, 0.3, 0.3});
  }
  for (const auto& start : povm_starts(n, projective, seed)) {
    const SearchResult r = nelder_mead(objective, start, opt);
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
    out.absorb(r.value, elements_from_params(r.x));
  }
  return out;
}

Vec3 direction_of(const Candidate& c) {
  return c.elements.front().tail<3>().normalized();
}

/// Minimum over projective measurements and, for n >= 3, general POVMs.
Candidate search_all(const ElementCost& cost, int max_outcomes,
                     std::uint64_t seed) {
  Candidate best = search_projective(cost);
  const Vec3 proj = direction_of(best);
  for (int n = 3; n <= max_outcomes; ++n) {
    Candidate c = search_povm(cost, n, proj, seed + static_cast<std::uint64_t>(n));
    best.evaluations += c.evaluations;
    best.converged = best.converged && c.converged;
    best.absorb(c.value, std::move(c.elements));
  }
  return best;
}

OracleResult to_result(const Candidate& c, double value, bool projective) {
  OracleResult r;
  r.value = value;
  r.evaluations = c.evaluations;
  r.converged = c.converged;
  if (projective && c.elements.size() == 2) {
    r.argmin = direction_of(c);
  } else {
    std::vector<Matrix2c> els;
    for (const Vec4& e : c.elements) els.push_back(element_from_coefficients(e));
    r.argmin = Povm::validated(std::move(els));
  }
  return r;
}

}  // namespace

OracleResult minimize_projective(const DensityMatrix& rho) {
  const ConditionalEvaluator eval(rho);
  const Candidate c = search_projective(
      [&](std::span<const Vec4> e) { return eval.discord(e); });
  return to_result(c, c.value, true);
}

OracleResult minimize_povm(const DensityMatrix& rho, int n_outcomes) {
  if (n_outcomes < 2 || n_outcomes > 4) {
    throw Error(ErrorKind::InvalidPovm,
                "outcome count must be 2, 3 or 4, got " +
                    std::to_string(n_outcomes));
  }
  const ConditionalEvaluator eval(rho);
  const Candidate c = search_all(
      [&](std::span<const Vec4> e) { return eval.discord(e); }, n_outcomes,
      0x9e3779b97f4a7c15ULL);
  return to_result(c, c.value, false);
}

OracleResult ensemble_oracle(const DensityMatrix& rho,
                             EnsembleObjective objective) {
  if (rho.dim_b() > 8) {
    throw Error(ErrorKind::DimensionTooLarge,
                "ensemble oracle needs d <= 8, got " +
                    std::to_string(rho.dim_b()));
  }
  const ConditionalEvaluator eval(rho);
  const MemberCost cost = objective == EnsembleObjective::EF
                              ? MemberCost::Entropy
                              : objective == EnsembleObjective::Concurrence
                                    ? MemberCost::Concurrence
                                    : MemberCost::Tangle;
  const Candidate c = search_all(
      [&](std::span<const Vec4> e) { return eval.ensemble_average(e, cost); },
      4, 0xc2b2ae3d27d4eb4fULL);
  const double value =
      objective == EnsembleObjective::Concurrence ? c.value * c.value : c.value;
  return to_result(c, value, false);
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim_b() != 2) {
    throw Error(ErrorKind::WrongDimension,
                "Wootters concurrence is defined for two qubits only");
  }
  const auto& s = pauli();
  Eigen::Matrix4cd yy;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) yy.block(2 * i, 2 * j, 2, 2) = s[2](i, j) * s[2];
  }
  const Eigen::Matrix4cd r = rho.matrix();
  const Eigen::Matrix4cd tilde = yy * r.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r * tilde, false);
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) {
    l[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

OracleResult accessible_info_oracle(double p1, const BlochVector& a,
                                    const BlochVector& b) {
  // Validates the parameters.
  make_binary_channel(p1, a, b);
  const double p2 = 1.0 - p1;
  const double hk = binary_entropy(p1);
  const auto neg_mutual_info = [&](std::span<const Vec4> elements) {
    double h_joint = 0;
    double h_outcome = 0;
    for (const Vec4& c : elements) {
      const double ja = p1 * (c[0] + c.tail<3>().dot(a)) / 2.0;
      const double jb = p2 * (c[0] + c.tail<3>().dot(b)) / 2.0;
      const double q = ja + jb;
      if (ja > 0) h_joint -= ja * std::log2(ja);
      if (jb > 0) h_joint -= jb * std::log2(jb);
      if (q > 0) h_outcome -= q * std::log2(q);
    }
    return -(hk + h_outcome - h_joint);
  };
  const Candidate c = search_all(neg_mutual_info, 3, 0x632be59bd9b4e019ULL);
  return to_result(c, -c.value, false);
}

double evaluate_discord_at(const DensityMatrix& rho, const OracleResult& r) {
  const ConditionalEvaluator eval(rho);
  if (const auto* m = std::get_if<Vec3>(&r.argmin)) return eval.discord(*m);
  return eval.discord(std::get<Povm>(r.argmin));
}

}  // namespace discord
