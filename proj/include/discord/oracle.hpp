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

#include <variant>

#include "discord/bounds.hpp"
#include "discord/measurement.hpp"
#include "discord/qstate.hpp"

namespace discord {

/// Brute-force reference values. Nothing here reads the correlation
/// machinery; every value comes from searching over measurements.
struct OracleResult {
  double value = 0;
  std::variant<Vec3, Povm> argmin = Vec3::UnitZ();
  int evaluations = 0;
  bool converged = false;
};

enum class EnsembleObjective { EF, Concurrence, Tangle };

/// min over unit vectors of D_A(rho | m): a 60 x 120 grid over the upper
/// hemisphere, then Nelder-Mead in (theta, phi) from the best 8 grid points
/// down to a 1e-6 simplex.
OracleResult minimize_projective(const DensityMatrix& rho);

/// min over POVMs with up to `n_outcomes` (2..4) elements. Two-outcome
/// rank-1 POVMs are projective; three and four outcomes are searched from
/// 16 seeded starts each, with the last element fixed by closure.
OracleResult minimize_povm(const DensityMatrix& rho, int n_outcomes);

/// Convex-roof quantities of rho_BC for the purification of rho. Ensembles
/// of rho_BC are generated by measurements on A, whose members have B
/// marginals rho_{B|i}. Concurrence is returned squared. d <= 8.
OracleResult ensemble_oracle(const DensityMatrix& rho,
                             EnsembleObjective objective);

/// max(0, l1 - l2 - l3 - l4) over the decreasing square roots of the
/// eigenvalues of rho (s2 s2) rho* (s2 s2).
double wootters_concurrence(const DensityMatrix& rho);

/// max over POVMs with up to 3 outcomes of the mutual information between
/// the sent label and the outcome.
OracleResult accessible_info_oracle(double p1, const BlochVector& a,
                                    const BlochVector& b);

/// Objective at a stored argmin, for re-evaluation checks.
double evaluate_discord_at(const DensityMatrix& rho, const OracleResult& r);

}  // namespace discord
