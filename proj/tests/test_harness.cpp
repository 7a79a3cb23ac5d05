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


#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "discord/errors.hpp"
#include "discord/families.hpp"
#include "discord/harness.hpp"
#include "discord/state_io.hpp"

using namespace discord;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "discord_bounds_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::DomainError;
}

}  // namespace

TEST_CASE("state files round trip exactly") {
  for (int d = 1; d <= 3; ++d) {
    const DensityMatrix rho = random_state(d, 2, 60 + d);
    const auto path = scratch("state" + std::to_string(d) + ".json");
    write_state_file(path, rho);
    const DensityMatrix back = read_state_file(path);
    CHECK(back.dim_b() == d);
    CHECK(back.matrix() == rho.matrix());
  }
  const UnitaryMatrix u = random_unitary(4, 5);
  const auto up = scratch("unitary.json");
  write_unitary_file(up, u);
  CHECK(read_unitary_file(up).matrix() == u.matrix());
}

TEST_CASE("state parsing errors") {
  const auto p = scratch("bad.json");
  write_text(p, "{ not json");
  CHECK(kind_of([&] { read_state_file(p); }) == ErrorKind::ParseError);
  write_text(p, R"({"dim_a": 2, "dim_b": 1, "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]})");
  CHECK(read_state_file(p).dim() == 2);
  write_text(p, R"({"dim_a": 3, "dim_b": 1, "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]})");
  CHECK_THROWS_AS(read_state_file(p), Error);
  write_text(p, R"({"dim_a": 2, "dim_b": 1, "matrix": [[[0.5,0],[0,0]],[[0,0],[0.6,0]]]})");
  CHECK(kind_of([&] { read_state_file(p); }) == ErrorKind::NotUnitTrace);
  CHECK(kind_of([&] { read_state_file(scratch("missing.json")); }) == ErrorKind::ParseError);
}

TEST_CASE("seeding") {
  CHECK(state_seed(42, 0) == 42);
  CHECK(state_seed(42, 1) == 43);
  CHECK(state_seed(42, 2) == 40);
}

TEST_CASE("summary statistics") {
  std::vector<ReportRow> rows(4);
  rows[0].gap_lo = 0.005, rows[0].gap_hi = 0.002;
  rows[1].gap_lo = 0.02, rows[1].gap_hi = 0.0;
  rows[2].gap_lo = 0.0, rows[2].gap_hi = -0.05;
  rows[3].gap_lo = 0.0, rows[3].gap_hi = -5e-8;
  const ReportSummary s = summarize(rows);
  CHECK(s.n == 4);
  CHECK(s.fraction_within_0_01 == doctest::Approx(0.5));
  CHECK(s.max_abs_gap == doctest::Approx(0.05));
  CHECK(s.violations == 1);
}

TEST_CASE("figure1 scan") {
  Figure1Options o;
  o.n = 40;
  o.rank = 4;
  o.seed = 42;
  o.threads = 1;
  const ExperimentReport a = run_figure1(o);
  CHECK(a.rows.size() == 40);
  CHECK(a.summary.violations == 0);
  CHECK(a.summary.fraction_within_0_01 >= 0);
  CHECK(a.summary.fraction_within_0_01 <= 1);
  for (const ReportRow& r : a.rows) {
    CHECK(std::max(0.0, r.lower) <= r.oracle_projective + kSandwichTolerance);
    CHECK(r.oracle_projective <= r.upper + kSandwichTolerance);
  }

  o.threads = 3;
  const ExperimentReport b = run_figure1(o);
  std::ostringstream ca, cb;
  write_csv(ca, a);
  write_csv(cb, b);
  CHECK(ca.str() == cb.str());
  CHECK(ca.str().rfind("# discord-bounds v1\nstate_id,lower,upper,oracle_projective,oracle_povm,"
                       "gap_lo,gap_hi,coincide\n",
                       0) == 0);

  o.n = 20;
  o.rank = 2;
  o.threads = 1;
  for (const ReportRow& r : run_figure1(o).rows) CHECK(r.coincide);

  o.rank = 4;
  o.n = 3;
  o.with_povm = true;
  o.weak_upper = false;
  for (const ReportRow& r : run_figure1(o).rows) {
    REQUIRE(r.oracle_povm.has_value());
    CHECK(*r.oracle_povm <= r.oracle_projective + 1e-7);
  }
  o.n = 0;
  CHECK_THROWS_AS(run_figure1(o), Error);
}

TEST_CASE("dqc1 report") {
  const UnitaryMatrix u = random_traceless_unitary(8, 3);
  const Dqc1Report r = run_dqc1(u, 1.0, true, true);
  REQUIRE(r.formula.lower.has_value());
  REQUIRE(r.generic.has_value());
  REQUIRE(r.oracle.has_value());
  CHECK(std::abs(*r.formula.lower - r.generic->lower) < 1e-8);
  CHECK(*r.oracle >= r.generic->lower - 1e-7);
  CHECK(*r.oracle <= r.generic->upper + 1e-7);

  const Dqc1Report z = run_dqc1(u, 0.0, true, true);
  CHECK(std::abs(z.formula.upper) < 1e-12);
  CHECK(std::abs(*z.oracle) < 1e-9);
}

TEST_CASE("channel report") {
  const ChannelReport r = run_channel(0.5, Vec3(0, 0, 1), Vec3(0, 0, -1));
  CHECK(r.bounds.coincide);
  CHECK(r.oracle.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("selftest") {
  SelftestOptions opt;
  opt.quick = true;
  for (const PropertyCheck& c : run_selftest(opt)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  opt.co_shift = 0.3;
  bool sandwich_failed = false;
  for (const PropertyCheck& c : run_selftest(opt)) {
    if (c.name.find("sandwich") != std::string::npos) sandwich_failed = !c.passed;
  }
  CHECK(sandwich_failed);
}

TEST_CASE("thread count honours the environment") {
  ::setenv("DISCORD_BOUNDS_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  ::unsetenv("DISCORD_BOUNDS_THREADS");
  CHECK(thread_count() >= 1);
}
