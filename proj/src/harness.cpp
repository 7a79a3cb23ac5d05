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

#include "discord/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include "discord/correlation.hpp"
#include "discord/errors.hpp"
#include "discord/families.hpp"

namespace discord {

int thread_count() {
  if (const char* env = std::getenv("DISCORD_BOUNDS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1, threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ReportSummary summarize(const std::vector<ReportRow>& rows) {
  ReportSummary s;
  s.n = rows.size();
  std::size_t within = 0;
  for (const ReportRow& r : rows) {
    if (std::abs(r.gap_lo) <= 0.01 && std::abs(r.gap_hi) <= 0.01) ++within;
    s.max_abs_gap =
        std::max({s.max_abs_gap, std::abs(r.gap_lo), std::abs(r.gap_hi)});
    if (r.gap_lo < -kSandwichTolerance || r.gap_hi < -kSandwichTolerance) {
      ++s.violations;
    }
  }
  s.fraction_within_0_01 =
      rows.empty() ? 0.0 : static_cast<double>(within) / rows.size();
  return s;
}

ExperimentReport run_figure1(const Figure1Options& options) {
  if (options.n < 1) {
    throw Error(ErrorKind::DomainError, "need at least one state");
  }
  ExperimentReport report;
  report.rows.resize(static_cast<std::size_t>(options.n));
  parallel_for(report.rows.size(), options.threads, [&](std::size_t i) {
    const DensityMatrix rho =
        random_state(2, options.rank, state_seed(options.seed, i));
    const DiscordBounds b = compute_bounds(rho);
    const OracleResult oracle = minimize_projective(rho);
    ReportRow& row = report.rows[i];
    row.state_id = i;
    row.lower = b.lower;
    row.upper = options.weak_upper ? *b.upper_weak : b.upper;
    row.oracle_projective = oracle.value;
    if (options.with_povm) row.oracle_povm = minimize_povm(rho, 4).value;
    row.gap_lo = oracle.value - b.lower_clamped();
    row.gap_hi = row.upper - oracle.value;
    row.coincide = b.coincide;
  });
  report.summary = summarize(report.rows);
  return report;
}

void write_csv(std::ostream& out, const ExperimentReport& report) {
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "# discord-bounds v1\n";
  out << "state_id,lower,upper,oracle_projective,oracle_povm,gap_lo,gap_hi,"
         "coincide\n";
  for (const ReportRow& r : report.rows) {
    out << r.state_id << ',' << num(r.lower) << ',' << num(r.upper) << ','
        << num(r.oracle_projective) << ','
        << (r.oracle_povm ? num(*r.oracle_povm) : std::string()) << ','
        << num(r.gap_lo) << ',' << num(r.gap_hi) << ','
        << (r.coincide ? 1 : 0) << '\n';
  }
}

Dqc1Report run_dqc1(const UnitaryMatrix& u, double alpha, bool with_generic,
                    bool with_oracle) {
  Dqc1Report r;
  r.params = dqc_params(u, alpha);
  r.formula = dqc1_bounds(r.params);
  if (with_generic || with_oracle) {
    const DensityMatrix rho = make_dqc1(u, alpha);
    if (with_generic) r.generic = compute_bounds(rho);
    if (with_oracle) r.oracle = minimize_projective(rho).value;
  }
  return r;
}

ChannelReport run_channel(double p1, const BlochVector& a,
                          const BlochVector& b) {
  return ChannelReport{accessible_info_bounds(p1, a, b),
                       accessible_info_oracle(p1, a, b)};
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

PropertyCheck max_error_check(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol,
          "max error " + fmt(worst) + " (tolerance " + fmt(tol) + ")"};
}

}  // namespace

std::vector<PropertyCheck> run_selftest(const SelftestOptions& options) {
  const int n = options.quick ? 12 : 60;
  const int n_ensemble = options.quick ? 3 : 12;
  std::vector<PropertyCheck> checks;

  {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const int d = 2 + i % 2;
      const DensityMatrix rho = random_state(d, 2 * d, 1000 + i);
      worst = std::max(worst, (q_matrix(rho).entries -
                               q_matrix_swap_reference(rho).entries)
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    checks.push_back(max_error_check("construction equivalence", worst, 1e-12));
  }
  {
    double worst_r = 0, worst_t = 0, worst_f = 0;
    for (int i = 0; i < n; ++i) {
      const DensityMatrix rho = random_state(2, 1 + i % 4, 2000 + i);
      const Mat4 r = r_matrix(rho);
      worst_r = std::max(worst_r, (q_matrix(rho).entries - r * eta() * r.transpose())
                                      .cwiseAbs()
                                      .maxCoeff());
      const FilteredState f = filtered_state(rho);
      const Mat3 t = t_matrix(f);
      const Mat3 q3 = -q_matrix(f).entries.bottomRightCorner<3, 3>();
      worst_t = std::max(worst_t, (t * t.transpose() - q3).cwiseAbs().maxCoeff());
      const double x2 = bloch_vector(partial_trace(rho, Subsystem::A)).squaredNorm();
      worst_f = std::max(worst_f,
                         std::abs((1 - x2) * lorentz_spectrum(q_matrix(f)).q2() -
                                  lorentz_spectrum(q_matrix(rho)).q2()));
    }
    checks.push_back(max_error_check("Q = R eta R^T", worst_r, 1e-12));
    checks.push_back(max_error_check("T T^T = Q3x3(rho~)", worst_t, 1e-10));
    checks.push_back(max_error_check("filter covariance of q2", worst_f, 1e-9));
  }
  {
    double worst_c = 0, worst_tau = 0, worst_kw = 0;
    for (int i = 0; i < n_ensemble; ++i) {
      const DensityMatrix rho = random_state(2, 1 + i % 4, 3000 + i);
      worst_c = std::max(worst_c,
                         std::abs(ensemble_oracle(rho, EnsembleObjective::Concurrence).value -
                                  concurrence_bc_squared(rho)));
      worst_tau = std::max(worst_tau,
                           std::abs(ensemble_oracle(rho, EnsembleObjective::Tangle).value -
                                    tangle_bc(rho)));
      const ConditionalEvaluator eval(rho);
      worst_kw = std::max(
          worst_kw, std::abs(ensemble_oracle(rho, EnsembleObjective::EF).value -
                             (minimize_povm(rho, 4).value + eval.entropy_ab() -
                              eval.entropy_a())));
    }
    checks.push_back(max_error_check("concurrence C^2_BC = 1 - L", worst_c, 1e-3));
    checks.push_back(max_error_check("tangle formula", worst_tau, 1e-3));
    checks.push_back(max_error_check("Koashi-Winter relation", worst_kw, 1e-3));
  }
  {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t seed = 4000 + i;
      const DensityMatrix rho =
          i % 4 == 0   ? random_bell_diagonal(seed)
          : i % 4 == 1 ? random_state(2, 2, seed)
          : i % 4 == 2 ? make_x_state(random_coincident_x_params(seed, false))
                       : random_filtered_coincident_state(seed);
      const DiscordBounds b = compute_bounds(rho);
      worst = std::max(worst, std::abs(b.upper - b.lower));
      if (!b.coincide) worst = std::max(worst, 1.0);
    }
    checks.push_back(max_error_check("coincidence families", worst, 1e-7));
  }
  {
    int violations = 0;
    for (int i = 0; i < n; ++i) {
      const DensityMatrix rho = random_state(2, 1 + i % 4, 5000 + i);
      const DiscordBounds b = compute_bounds(rho);
      const double lower = co(b.l_value) + options.co_shift + b.entropy_a -
                           b.entropy_ab;
      const double oracle = minimize_projective(rho).value;
      if (std::max(0.0, lower) > oracle + kSandwichTolerance ||
          oracle > b.upper + kSandwichTolerance) {
        ++violations;
      }
    }
    checks.push_back({"sandwich lower <= oracle <= upper", violations == 0,
                      std::to_string(violations) + " violations in " +
                          std::to_string(n) + " states"});
  }
  {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const int d = 1 + i % 4;
      const DensityMatrix rho = random_state(d, 1 + (i / 4) % (2 * d), 6000 + i);
      const double purity = rho.purity();
      worst = std::max(worst, co(2 * purity - 1) - von_neumann_entropy(rho));
    }
    checks.push_back(max_error_check("S(rho) >= co(2 Tr rho^2 - 1)",
                                     std::max(0.0, worst), 1e-10));
  }
  return checks;
}

}  // namespace discord
