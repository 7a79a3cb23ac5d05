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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "discord/bounds.hpp"
#include "discord/oracle.hpp"
#include "discord/qstate.hpp"

namespace discord {

/// Worker count: DISCORD_BOUNDS_THREADS when set and positive, otherwise
/// the hardware concurrency.
int thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled exactly once; results must be written to per-index slots.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

/// Seed of the i-th state of a scan.
inline std::uint64_t state_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ index;
}

struct ReportRow {
  std::uint64_t state_id = 0;
  double lower = 0;
  double upper = 0;
  double oracle_projective = 0;
  std::optional<double> oracle_povm;
  double gap_lo = 0;  // oracle - max(0, lower)
  double gap_hi = 0;  // upper - oracle
  bool coincide = false;
};

struct ReportSummary {
  std::size_t n = 0;
  double fraction_within_0_01 = 0;
  double max_abs_gap = 0;
  std::size_t violations = 0;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  ReportSummary summary;
};

/// Sandwich slack used for violation counting.
inline constexpr double kSandwichTolerance = 1e-7;

ReportSummary summarize(const std::vector<ReportRow>& rows);

struct Figure1Options {
  int n = 1000;
  int rank = 4;
  std::uint64_t seed = 42;
  int threads = 1;
  /// Use the weak upper bound h(1 - tau_BC) + S(rho_A) - S(rho) as in the
  /// published scatter plot; otherwise the measured D_A(rho | m).
  bool weak_upper = true;
  bool with_povm = false;
};

/// Random two-qubit states of the given rank, bounds vs projective oracle.
ExperimentReport run_figure1(const Figure1Options& options);

/// CSV with a "# discord-bounds v1" header line.
void write_csv(std::ostream& out, const ExperimentReport& report);

struct Dqc1Report {
  DqcParams params;
  DqcBounds formula;
  std::optional<DiscordBounds> generic;
  std::optional<double> oracle;
};

Dqc1Report run_dqc1(const UnitaryMatrix& u, double alpha, bool with_generic,
                    bool with_oracle);

struct ChannelReport {
  ChannelBounds bounds;
  OracleResult oracle;
};

ChannelReport run_channel(double p1, const BlochVector& a,
                          const BlochVector& b);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  bool quick = false;
  /// Added to co(L) in the sandwich check; nonzero values are a negative
  /// control that must produce violations.
  double co_shift = 0.0;
};

std::vector<PropertyCheck> run_selftest(const SelftestOptions& options);

}  // namespace discord
