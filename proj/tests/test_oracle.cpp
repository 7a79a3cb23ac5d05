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
#include <numbers>

#include "discord/bounds.hpp"
#include "discord/direct_search.hpp"
#include "discord/errors.hpp"
#include "discord/families.hpp"
#include "discord/oracle.hpp"
#include "test_support.hpp"

using namespace discord;

namespace {

constexpr double kBellDiagonalOracle = 0.12091378908052741;
constexpr double kXStateOracle = 0.2524062760137724;

CMatrix bell() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1 / std::sqrt(2.0);
  return v * v.adjoint();
}

// Concurrence of a Bell-diagonal state from its weights: 2 max(w) - 1.
double bell_diagonal_concurrence(double c1, double c2, double c3) {
  const double w[] = {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4,
                      (1 + c1 - c2 + c3) / 4, (1 + c1 + c2 - c3) / 4};
  return std::max(0.0, 2 * *std::max_element(std::begin(w), std::end(w)) - 1);
}

}  // namespace

TEST_CASE("simplex search finds a quadratic minimum") {
  const auto f = [](const std::vector<double>& x) {
    return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2);
  };
  SearchOptions opt;
  opt.initial_step = {0.5, 0.5};
  const SearchResult r = nelder_mead(f, {0.0, 0.0}, opt);
  CHECK(r.value < 1e-10);
  CHECK(std::abs(r.x[0] - 1) < 1e-4);
  CHECK(std::abs(r.x[1] + 2) < 1e-4);
  CHECK(r.converged);

  // infeasible half-plane is rejected
  const auto g = [](const std::vector<double>& x) {
    return x[0] < 0.5 ? std::numeric_limits<double>::infinity() : x[0] * x[0];
  };
  opt.initial_step = {0.3};
  CHECK(nelder_mead(g, {1.0}, opt).x[0] >= 0.5);
}

TEST_CASE("projective oracle on reference states") {
  const OracleResult bd = minimize_projective(make_bell_diagonal(0.6, -0.4, 0.2));
  CHECK(std::abs(bd.value - kBellDiagonalOracle) < 1e-4);
  const Vec3 m = std::get<Vec3>(bd.argmin);
  CHECK(std::abs(std::abs(m(0)) - 1) < 1e-3);

  const CMatrix prod = discord::testing::kron(qubit_from_bloch(Vec3(0.2, 0.1, 0.4)),
                                              qubit_from_bloch(Vec3(-0.3, 0.5, 0)));
  CHECK(std::abs(minimize_projective(DensityMatrix::validated(prod, 2)).value) < 1e-9);
  CHECK(minimize_projective(DensityMatrix::validated(bell(), 2)).value ==
        doctest::Approx(1.0));
  CHECK(std::abs(minimize_projective(make_x_state({0, 0, 0.5, 0.3, 0.2})).value -
                 kXStateOracle) < 1e-4);
}

TEST_CASE("oracle result re-evaluates to its value") {
  for (int i = 0; i < 6; ++i) {
    const DensityMatrix rho = random_state(2 + i % 2, 1 + i % 4, 2100 + i);
    const OracleResult p = minimize_projective(rho);
    CHECK(std::abs(evaluate_discord_at(rho, p) - p.value) < 1e-12);
    CHECK(p.value >= -1e-12);
    CHECK(p.value <= std::log2(rho.dim_b()) + 1);
    CHECK(p.evaluations > 0);
  }
  const DensityMatrix rho = random_state(2, 4, 2200);
  const OracleResult q = minimize_povm(rho, 3);
  CHECK(std::abs(evaluate_discord_at(rho, q) - q.value) < 1e-12);
}

TEST_CASE("projective oracle agrees with an independent grid search") {
  for (int i = 0; i < 4; ++i) {
    const int d = 2 + i % 2;
    const DensityMatrix rho = random_state(d, 2 + i, 2300 + i);
    const double ref = discord::testing::grid_min_discord(rho.matrix(), d, 60);
    CHECK(std::abs(minimize_projective(rho).value - ref) < 1e-6);
  }
}

TEST_CASE("projective oracle is invariant under A rotations") {
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix rho = random_state(2, 1 + i % 4, 2400 + i);
    const DensityMatrix rot = conjugate_local(rho, random_unitary(2, 2410 + i).matrix(),
                                              CMatrix::Identity(2, 2));
    CHECK(std::abs(minimize_projective(rho).value - minimize_projective(rot).value) < 1e-6);
  }
}

TEST_CASE("POVM oracle") {
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix rho = random_state(2, 1 + i % 4, 2500 + i);
    const double proj = minimize_projective(rho).value;
    CHECK(std::abs(minimize_povm(rho, 2).value - proj) < 1e-6);
    const double p4 = minimize_povm(rho, 4).value;
    CHECK(p4 <= proj + 1e-7);
    const DiscordBounds b = compute_bounds(rho);
    CHECK(p4 >= b.lower - 1e-7);
  }
  const DensityMatrix bd = make_bell_diagonal(0.6, -0.4, 0.2);
  CHECK(std::abs(minimize_povm(bd, 4).value - kBellDiagonalOracle) < 1e-4);

  const DensityMatrix cq = make_binary_channel(0.4, Vec3(0.2, 0.3, 0.1), Vec3(0, -0.5, 0.5));
  // zero discord on the register side is structural; on A it is not, so use
  // the swapped classical-quantum state instead: diagonal on A.
  CMatrix cqa = CMatrix::Zero(4, 4);
  cqa.topLeftCorner(2, 2) = 0.3 * qubit_from_bloch(Vec3(0.1, 0.4, 0.2));
  cqa.bottomRightCorner(2, 2) = 0.7 * qubit_from_bloch(Vec3(-0.5, 0, 0.3));
  CHECK(std::abs(minimize_povm(DensityMatrix::validated(cqa, 2), 4).value) < 1e-6);
  CHECK(minimize_projective(cq).value >= -1e-12);

  const OracleResult r = minimize_povm(random_state(2, 4, 3), 4);
  if (const auto* p = std::get_if<Povm>(&r.argmin)) {
    Matrix2c sum = Matrix2c::Zero();
    for (const Matrix2c& e : p->elements()) sum += e;
    CHECK((sum - Matrix2c::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("POVM closure") {
  std::vector<Vec4> c{rank_one_coefficients(0.5, Vec3(0, 0, 1)),
                      rank_one_coefficients(0.5, Vec3(1, 0, 0))};
  REQUIRE(close_povm(c));
  REQUIRE(c.size() == 3);
  Vec4 total = Vec4::Zero();
  for (const Vec4& v : c) total += v;
  CHECK((total - Vec4(2, 0, 0, 0)).norm() < 1e-15);

  std::vector<Vec4> over{rank_one_coefficients(1.5, Vec3(0, 0, 1))};
  CHECK_FALSE(close_povm(over));
}

TEST_CASE("Wootters concurrence") {
  CHECK(wootters_concurrence(DensityMatrix::validated(bell(), 2)) == doctest::Approx(1.0));
  CHECK(std::abs(wootters_concurrence(make_bell_diagonal(0.5, 0, 0))) < 1e-12);
  CHECK(wootters_concurrence(make_bell_diagonal(-0.8, -0.8, -0.8)) == doctest::Approx(0.7));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix bd = random_bell_diagonal(s);
    const XStateParams p = x_state_expectations(bd);
    CHECK(std::abs(wootters_concurrence(bd) - bell_diagonal_concurrence(p.s1, p.s2, p.s3)) <
          1e-10);
  }
  CHECK_THROWS_AS(wootters_concurrence(random_state(3, 2, 1)), Error);
}

TEST_CASE("ensemble oracles") {
  for (int i = 0; i < 4; ++i) {
    const DensityMatrix rho = random_state(2, 1 + i, 2600 + i);
    CHECK(std::abs(ensemble_oracle(rho, EnsembleObjective::Concurrence).value -
                   concurrence_bc_squared(rho)) < 1e-3);
    CHECK(std::abs(ensemble_oracle(rho, EnsembleObjective::Tangle).value - tangle_bc(rho)) <
          1e-3);
    const ConditionalEvaluator eval(rho);
    CHECK(std::abs(ensemble_oracle(rho, EnsembleObjective::EF).value -
                   (minimize_povm(rho, 4).value + eval.entropy_ab() - eval.entropy_a())) <
          1e-3);
  }
  CHECK_THROWS_AS(ensemble_oracle(random_state(9, 2, 1), EnsembleObjective::EF), Error);
}

TEST_CASE("accessible information oracle") {
  CHECK(accessible_info_oracle(0.5, Vec3(0, 0, 1), Vec3(0, 0, -1)).value ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(accessible_info_oracle(0.5, Vec3(0.2, 0, 0.4), Vec3(0.2, 0, 0.4)).value) <
        1e-9);
  for (double theta : {0.4, 1.0, std::numbers::pi / 2, 2.5}) {
    const BinaryChannel c = pure_channel(theta);
    const double expect = 1 - binary_entropy((1 + std::sin(theta / 2)) / 2);
    CHECK(std::abs(accessible_info_oracle(c.p1, c.a, c.b).value - expect) < 1e-4);
  }
  const Vec3 a = Vec3(1, 0, 0) * std::sqrt(0.6), b = Vec3(0.6, 0, 0.8) * std::sqrt(0.9);
  const ChannelBounds cb = accessible_info_bounds(1.0 / 3, a, b);
  const double v = accessible_info_oracle(1.0 / 3, a, b).value;
  CHECK(std::abs(v - cb.upper) < 1e-3);
  CHECK(v <= binary_entropy(1.0 / 3) + 1e-9);
}

TEST_CASE("oracles are deterministic") {
  const DensityMatrix rho = random_state(2, 4, 99);
  const OracleResult a = minimize_povm(rho, 3), b = minimize_povm(rho, 3);
  CHECK(a.value == b.value);
  CHECK(a.evaluations == b.evaluations);
}
