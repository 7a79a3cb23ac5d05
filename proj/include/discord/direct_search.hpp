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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace discord {

struct SearchOptions {
  /// Edge length of the initial simplex, per coordinate.
  std::vector<double> initial_step;
  /// Stop once every vertex lies within this distance (max-norm) of the best.
  double tolerance = 1e-6;
  int max_evaluations = 20000;
  /// Rebuild the simplex around the optimum this many times after
  /// convergence; guards against a collapsed simplex stalling early.
  int restarts = 2;
};

struct SearchResult {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead downhill simplex. The objective may return +inf to reject
/// infeasible points.
template <typename Objective>
SearchResult nelder_mead(Objective&& f, std::vector<double> start,
                         const SearchOptions& opt) {
  const std::size_t n = start.size();
  SearchResult res;
  res.x = start;
  res.value = f(start);
  res.evaluations = 1;

  std::vector<std::vector<double>> simplex(n + 1);
  std::vector<double> fv(n + 1);
  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  const auto eval = [&](const std::vector<double>& p) {
    ++res.evaluations;
    return f(p);
  };

  for (int round = 0; round <= opt.restarts; ++round) {
    const double scale = round == 0 ? 1.0 : 0.1;
    simplex[0] = res.x;
    fv[0] = res.value;
    for (std::size_t i = 0; i < n; ++i) {
      simplex[i + 1] = res.x;
      simplex[i + 1][i] += scale * opt.initial_step[i];
      fv[i + 1] = eval(simplex[i + 1]);
    }
    bool converged = false;
    while (res.evaluations < opt.max_evaluations) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
      const std::size_t best = order[0];
      const std::size_t worst = order[n];
      const std::size_t second = order[n - 1];

      double size = 0;
      for (std::size_t v = 0; v <= n; ++v) {
        for (std::size_t i = 0; i < n; ++i) {
          size = std::max(size, std::abs(simplex[v][i] - simplex[best][i]));
        }
      }
      if (size <= opt.tolerance) {
        converged = true;
        break;
      }

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t v = 0; v <= n; ++v) {
        if (v == worst) continue;
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v][i];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = centroid[i] + (centroid[i] - simplex[worst][i]);
      }
      const double fr = eval(trial);
      if (fr < fv[best]) {
        for (std::size_t i = 0; i < n; ++i) {
          trial2[i] = centroid[i] + 2.0 * (centroid[i] - simplex[worst][i]);
        }
        const double fe = eval(trial2);
        if (fe < fr) {
          simplex[worst] = trial2;
          fv[worst] = fe;
        } else {
          simplex[worst] = trial;
          fv[worst] = fr;
        }
        continue;
      }
      if (fr < fv[second]) {
        simplex[worst] = trial;
        fv[worst] = fr;
        continue;
      }
      // Contraction, outside when the reflection beat the worst vertex.
      const bool outside = fr < fv[worst];
      for (std::size_t i = 0; i < n; ++i) {
        const double toward = outside ? trial[i] : simplex[worst][i];
        trial2[i] = centroid[i] + 0.5 * (toward - centroid[i]);
      }
      const double fc = eval(trial2);
      if (fc < (outside ? fr : fv[worst])) {
        simplex[worst] = trial2;
        fv[worst] = fc;
        continue;
      }
      for (std::size_t v = 0; v <= n; ++v) {
        if (v == best) continue;
        for (std::size_t i = 0; i < n; ++i) {
          simplex[v][i] =
              simplex[best][i] + 0.5 * (simplex[v][i] - simplex[best][i]);
        }
        fv[v] = eval(simplex[v]);
      }
    }
    const std::size_t best = static_cast<std::size_t>(
        std::min_element(fv.begin(), fv.end()) - fv.begin());
    const bool improved = fv[best] < res.value;
    if (improved) {
      res.x = simplex[best];
      res.value = fv[best];
    }
    res.converged = converged;
    if (!converged || (round > 0 && !improved)) break;
  }
  return res;
}

}  // namespace discord
