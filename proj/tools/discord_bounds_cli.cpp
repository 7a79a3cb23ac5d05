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

// discord-bounds: command-line front end.
//
// Exit codes: 0 success, 1 property failure, 2 input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "discord/bounds.hpp"
#include "discord/correlation.hpp"
#include "discord/errors.hpp"
#include "discord/harness.hpp"
#include "discord/oracle.hpp"
#include "discord/state_io.hpp"

namespace {

using namespace discord;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json spectrum_json(const LorentzSpectrum& s) {
  return json::array({s.q[0], s.q[1], s.q[2], s.q[3]});
}

Vec3 parse_vec3(const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  std::vector<double> v;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad number '" + item + "'");
    }
  }
  if (v.size() != 3) {
    throw Error(ErrorKind::ParseError, "expected x,y,z, got '" + text + "'");
  }
  return Vec3(v[0], v[1], v[2]);
}

std::string fmt_vec(const Vec3& v) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
  return os.str();
}

int cmd_bounds(const std::string& path, bool as_json) {
  const DensityMatrix rho = read_state_file(path);
  const DiscordBounds b = compute_bounds(rho);
  if (as_json) {
    json j{{"lower", b.lower},
           {"upper", b.upper},
           {"coincide", b.coincide},
           {"direction", vec_json(b.direction.m)},
           {"t1", b.t1},
           {"q2_filtered", b.q2},
           {"L", b.l_value},
           {"q_spectrum", spectrum_json(b.spectrum)},
           {"q_spectrum_filtered", spectrum_json(b.filtered_spectrum)},
           {"bloch", vec_json(b.bloch)},
           {"entropy_a", b.entropy_a},
           {"entropy_b", b.entropy_b},
           {"entropy_ab", b.entropy_ab}};
    if (b.upper_weak) j["upper_weak"] = *b.upper_weak;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout.precision(12);
  std::cout << "lower:       " << b.lower << "\n"
            << "upper:       " << b.upper << "\n";
  if (b.upper_weak) std::cout << "upper_weak:  " << *b.upper_weak << "\n";
  std::cout << "coincide:    " << (b.coincide ? "true" : "false") << "\n"
            << "direction:   " << fmt_vec(b.direction.m) << "\n"
            << "q spectrum:  " << b.spectrum.q[0] << " " << b.spectrum.q[1]
            << " " << b.spectrum.q[2] << " " << b.spectrum.q[3] << "\n"
            << "q2(rho~):    " << b.q2 << "\n"
            << "t1(rho~):    " << b.t1 << "\n"
            << "L:           " << b.l_value << "\n";
  return 0;
}

int cmd_oracle(const std::string& path, int povm_outcomes, bool as_json) {
  const DensityMatrix rho = read_state_file(path);
  const OracleResult proj = minimize_projective(rho);
  std::optional<OracleResult> povm;
  if (povm_outcomes >= 3) povm = minimize_povm(rho, povm_outcomes);
  if (as_json) {
    json j{{"projective", proj.value},
           {"argmin", vec_json(std::get<Vec3>(proj.argmin))},
           {"evaluations", proj.evaluations},
           {"converged", proj.converged}};
    if (povm) j["povm"] = povm->value;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout.precision(12);
  std::cout << "projective:  " << proj.value << "\n"
            << "argmin:      " << fmt_vec(std::get<Vec3>(proj.argmin)) << "\n"
            << "evaluations: " << proj.evaluations << "\n";
  if (povm) std::cout << "povm:        " << povm->value << "\n";
  return 0;
}

int cmd_figure1(const Figure1Options& opt, const std::string& out) {
  const ExperimentReport report = run_figure1(opt);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out);
    write_csv(f, report);
  }
  const ReportSummary& s = report.summary;
  std::cout << "n:                    " << s.n << "\n"
            << "fraction_within_0_01: " << s.fraction_within_0_01 << "\n"
            << "max_abs_gap:          " << s.max_abs_gap << "\n"
            << "violations:           " << s.violations << "\n";
  return s.violations == 0 ? 0 : kExitFailure;
}

int cmd_dqc1(int n_qubits, double alpha, const std::string& unitary_file,
             std::optional<std::uint64_t> random_seed, bool traceless,
             bool want_lower) {
  std::optional<UnitaryMatrix> u;
  if (!unitary_file.empty()) {
    u = read_unitary_file(unitary_file);
  } else {
    if (n_qubits < 1 || n_qubits > 10) {
      throw Error(ErrorKind::DomainError, "--n-qubits must be in [1, 10]");
    }
    const int d = 1 << n_qubits;
    const std::uint64_t seed = random_seed.value_or(0);
    u = traceless ? random_traceless_unitary(d, seed) : random_unitary(d, seed);
  }
  const int d = u->dim();
  const bool small = d <= 64;
  const Dqc1Report r = run_dqc1(*u, alpha, small, small);
  if (want_lower) dqc1_lower(r.params);  // surfaces RegimeError
  std::cout.precision(12);
  std::cout << "d:             " << d << "\n"
            << "alpha:         " << alpha << "\n"
            << "u1:            " << r.params.u1 << "\n"
            << "beta:          " << r.params.beta << "\n";
  if (r.formula.lower) {
    std::cout << "formula lower: " << *r.formula.lower << "\n";
  } else {
    std::cout << "formula lower: n/a (needs u1 = 0 and d >= 4)\n";
  }
  std::cout << "formula upper: " << r.formula.upper << "\n";
  if (r.generic) {
    std::cout << "generic lower: " << r.generic->lower << "\n"
              << "generic upper: " << r.generic->upper << "\n";
  }
  if (r.oracle) std::cout << "oracle:        " << *r.oracle << "\n";
  return 0;
}

int cmd_channel(double p1, const std::string& a_text, const std::string& b_text) {
  const ChannelReport r = run_channel(p1, parse_vec3(a_text), parse_vec3(b_text));
  const ChannelBounds& b = r.bounds;
  std::cout.precision(12);
  std::cout << "holevo_chi:   " << b.holevo_chi << "\n"
            << "lambda_plus:  " << b.lambda_plus << "\n"
            << "lambda_minus: " << b.lambda_minus << "\n"
            << "lower:        " << b.lower << "\n"
            << "upper:        " << b.upper << "\n"
            << "coincide:     " << (b.coincide ? "true" : "false") << "\n"
            << "direction:    " << fmt_vec(b.optimal_direction) << "\n"
            << "oracle:       " << r.oracle.value << "\n";
  return 0;
}

int cmd_xstate(const XStateParams& p) {
  const DensityMatrix rho = make_x_state(p);
  const DiscordBounds b = compute_bounds(rho);
  std::cout.precision(12);
  std::cout << "condition:    " << (x_state_condition(p) ? "true" : "false")
            << "\n"
            << "lower:        " << b.lower << "\n"
            << "upper:        " << b.upper << "\n"
            << "coincide:     " << (b.coincide ? "true" : "false") << "\n";
  if (x_state_condition(p) && b.coincide) {
    std::cout << "closed form:  " << x_state_discord(p) << "\n";
  }
  return 0;
}

int cmd_selftest(bool quick, double co_shift) {
  const auto checks = run_selftest({quick, co_shift});
  bool ok = true;
  for (const PropertyCheck& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail
              << "\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the quantum discord of qubit-qudit states"};
  app.require_subcommand(1);

  std::string state_path;
  bool as_json = false;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper discord bounds of a state file");
  bounds->add_option("statefile", state_path)->required();
  bounds->add_flag("--json", as_json);

  int povm_outcomes = 2;
  auto* oracle = app.add_subcommand("oracle", "Brute-force discord of a state file");
  oracle->add_option("statefile", state_path)->required();
  oracle->add_option("--povm", povm_outcomes, "also search POVMs with up to N outcomes (3 or 4)")
      ->check(CLI::Range(2, 4));
  oracle->add_flag("--json", as_json);

  Figure1Options fig;
  fig.threads = thread_count();
  std::string csv_out;
  bool strong_upper = false;
  auto* figure1 = app.add_subcommand("figure1", "Random-state scan: bounds vs oracle");
  figure1->add_option("--n", fig.n)->check(CLI::PositiveNumber);
  figure1->add_option("--rank", fig.rank)->check(CLI::Range(1, 4));
  figure1->add_option("--seed", fig.seed);
  figure1->add_option("--out", csv_out, "CSV output path");
  figure1->add_option("--threads", fig.threads)->check(CLI::PositiveNumber);
  figure1->add_flag("--strong-upper", strong_upper, "use D_A(rho|m) as the upper bound");
  figure1->add_flag("--povm", fig.with_povm, "also record the POVM oracle");

  int n_qubits = 3;
  double alpha = 1.0;
  std::string unitary_file;
  std::uint64_t random_seed = 0;
  bool traceless = false;
  bool want_lower = false;
  auto* dqc1 = app.add_subcommand("dqc1", "Bounds for the DQC1 output state");
  dqc1->add_option("--n-qubits", n_qubits);
  dqc1->add_option("--alpha", alpha)->check(CLI::Range(0.0, 1.0));
  auto* unitary_opt = dqc1->add_option("--unitary", unitary_file, "unitary JSON file");
  auto* random_opt = dqc1->add_option("--random", random_seed, "seed for a random unitary");
  unitary_opt->excludes(random_opt);
  dqc1->add_flag("--traceless", traceless, "random U with Tr U = 0");
  dqc1->add_flag("--formula-lower", want_lower, "require the closed-form lower bound");

  double p1 = 0.5;
  std::string a_text, b_text;
  auto* channel = app.add_subcommand("channel", "Accessible information of a binary qubit channel");
  channel->add_option("--p1", p1)->required();
  channel->add_option("--a", a_text, "Bloch vector x,y,z")->required();
  channel->add_option("--b", b_text, "Bloch vector x,y,z")->required();

  XStateParams xp;
  auto* xstate = app.add_subcommand("xstate", "Closed-form discord of an X-state");
  xstate->add_option("--x", xp.x);
  xstate->add_option("--y", xp.y);
  xstate->add_option("--s1", xp.s1);
  xstate->add_option("--s2", xp.s2);
  xstate->add_option("--s3", xp.s3);

  int dim_b = 2, rank = 4;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* random = app.add_subcommand("random-state", "Write a seeded random state file");
  random->add_option("--dim-b", dim_b)->check(CLI::PositiveNumber);
  random->add_option("--rank", rank)->check(CLI::PositiveNumber);
  random->add_option("--seed", seed);
  random->add_option("--out", out_path)->required();

  bool quick = false;
  double co_shift = 0.0;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_flag("--quick", quick);
  selftest->add_option("--mutate-co", co_shift)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*bounds) return cmd_bounds(state_path, as_json);
    if (*oracle) return cmd_oracle(state_path, povm_outcomes, as_json);
    if (*figure1) {
      fig.weak_upper = !strong_upper;
      return cmd_figure1(fig, csv_out);
    }
    if (*dqc1) {
      std::optional<std::uint64_t> s;
      if (random_opt->count()) s = random_seed;
      return cmd_dqc1(n_qubits, alpha, unitary_file, s, traceless, want_lower);
    }
    if (*channel) return cmd_channel(p1, a_text, b_text);
    if (*xstate) return cmd_xstate(xp);
    if (*random) {
      write_state_file(out_path, random_state(dim_b, rank, seed));
      return 0;
    }
    if (*selftest) return cmd_selftest(quick, co_shift);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
