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

#include "discord/bounds.hpp"
#include "discord/errors.hpp"
#include "discord/qstate.hpp"
#include "test_support.hpp"

using namespace discord;
using discord::testing::kron;
using discord::testing::max_abs;

namespace {

CMatrix bell_phi_plus() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1 / std::sqrt(2.0);
  return v * v.adjoint();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("validation accepts and rejects") {
  const DensityMatrix mixed = DensityMatrix::validated(CMatrix::Identity(4, 4) / 4.0, 2);
  CHECK(mixed.purity() == doctest::Approx(0.25));
  const DensityMatrix bell = DensityMatrix::validated(bell_phi_plus(), 2);
  CHECK(bell.purity() == doctest::Approx(1.0));

  CMatrix neg = CMatrix::Zero(4, 4);
  neg.diagonal() << 0.6, 0.6, -0.1, -0.1;
  CHECK(kind_of([&] { DensityMatrix::validated(neg, 2); }) == ErrorKind::NotPositive);

  CMatrix skew = CMatrix::Identity(4, 4) / 4.0;
  skew(0, 1) = 0.1;
  CHECK(kind_of([&] { DensityMatrix::validated(skew, 2); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([&] { DensityMatrix::validated(CMatrix::Identity(4, 4) / 2.0, 2); }) ==
        ErrorKind::NotUnitTrace);
  CHECK(kind_of([&] { DensityMatrix::validated(CMatrix::Identity(4, 4) / 4.0, 3); }) ==
        ErrorKind::WrongDimension);
}

TEST_CASE("partial traces match index sums") {
  for (int d = 1; d <= 4; ++d) {
    const DensityMatrix rho = random_state(d, 2 * d, 11 + d);
    CHECK(max_abs(partial_trace(rho, Subsystem::A) -
                  discord::testing::reference_trace_b(rho.matrix(), d)) < 1e-13);
    CHECK(max_abs(partial_trace(rho, Subsystem::B) -
                  discord::testing::reference_trace_a(rho.matrix(), d)) < 1e-13);
    CHECK(partial_trace(rho, Subsystem::A).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(partial_trace(rho, Subsystem::B).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  const CMatrix ma = partial_trace(DensityMatrix::validated(bell_phi_plus(), 2), Subsystem::A);
  CHECK(max_abs(ma - CMatrix::Identity(2, 2) / 2.0) < 1e-15);
}

TEST_CASE("product state marginals") {
  const CMatrix a = qubit_from_bloch(Vec3(0.1, -0.3, 0.5));
  const CMatrix b = random_state(1, 2, 17).matrix();  // any 2x2 state
  const DensityMatrix rho = DensityMatrix::validated(kron(a, b), 2);
  CHECK(max_abs(partial_trace(rho, Subsystem::A) - a) < 1e-14);
  CHECK(max_abs(partial_trace(rho, Subsystem::B) - b) < 1e-14);
}

TEST_CASE("entropy") {
  CHECK(von_neumann_entropy(DensityMatrix::validated(bell_phi_plus(), 2)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(CMatrix(CMatrix::Identity(4, 4) / 4.0)) == doctest::Approx(2.0));
  CMatrix half = CMatrix::Zero(4, 4);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(von_neumann_entropy(half) == doctest::Approx(1.0));
  CMatrix noisy = half;
  noisy(2, 2) = -5e-10;
  noisy(0, 0) += 5e-10;
  CHECK(von_neumann_entropy(noisy) == doctest::Approx(1.0));
  CMatrix bad = half;
  bad(2, 2) = -1e-6;
  CHECK(kind_of([&] { von_neumann_entropy(bad); }) == ErrorKind::NotPositive);

  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 4;
    const DensityMatrix rho = random_state(d, 1 + i % (2 * d), 300 + i);
    CHECK(von_neumann_entropy(rho) ==
          doctest::Approx(discord::testing::reference_entropy(rho.matrix())).epsilon(1e-10));
  }
  const double probs[] = {0.25, 0.25, 0.5};
  CHECK(shannon_entropy(probs) == doctest::Approx(1.5));
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
}

TEST_CASE("entropy is invariant under local unitaries") {
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 3;
    const DensityMatrix rho = random_state(d, 1 + i % (2 * d), 400 + i);
    const CMatrix va = random_unitary(2, 500 + i).matrix();
    const CMatrix vb = random_unitary(d, 600 + i).matrix();
    const DensityMatrix rot = conjugate_local(rho, va, vb);
    CHECK(max_abs(rot.matrix() - discord::testing::local_conjugate(rho.matrix(), va, vb)) < 1e-13);
    CHECK(std::abs(von_neumann_entropy(rot) - von_neumann_entropy(rho)) < 1e-9);
  }
}

TEST_CASE("bloch vector") {
  CHECK(bloch_vector(CMatrix::Identity(2, 2) / 2.0).norm() < 1e-15);
  CMatrix up = CMatrix::Zero(2, 2);
  up(0, 0) = 1;
  CHECK((bloch_vector(up) - Vec3(0, 0, 1)).norm() < 1e-15);
  const CMatrix sx = (pauli()[0] + 0.3 * pauli()[1]) / 2.0;
  CHECK((bloch_vector(sx) - Vec3(0.3, 0, 0)).norm() < 1e-15);
  for (int i = 0; i < 30; ++i) {
    const DensityMatrix rho = random_state(1 + i % 4, 1 + i % 2, 700 + i);
    const CMatrix ra = partial_trace(rho, Subsystem::A);
    const Vec3 x = bloch_vector(ra);
    CHECK(x.norm() <= 1 + 1e-9);
    CHECK(std::abs(x.squaredNorm() - (2 * (ra * ra).trace().real() - 1)) < 1e-9);
    CHECK(max_abs(qubit_from_bloch(x) - ra) < 1e-14);
  }
}

TEST_CASE("random states") {
  const DensityMatrix a = random_state(2, 4, 7);
  const DensityMatrix b = random_state(2, 4, 7);
  CHECK(a.matrix() == b.matrix());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix());
  CHECK(es.eigenvalues()(0) > 1e-6);

  const DensityMatrix pure = random_state(2, 1, 1);
  CHECK(std::abs(von_neumann_entropy(pure)) < 1e-9);

  for (int r = 1; r <= 4; ++r) {
    Eigen::SelfAdjointEigenSolver<CMatrix> s(random_state(2, r, 20 + r).matrix());
    int nonzero = 0;
    for (double l : s.eigenvalues()) nonzero += l > 1e-10;
    CHECK(nonzero == r);
  }
  CHECK(kind_of([] { random_state(2, 5, 1); }) == ErrorKind::InvalidRank);
  CHECK(kind_of([] { random_state(2, 0, 1); }) == ErrorKind::InvalidRank);
}

TEST_CASE("random unitaries") {
  for (int d : {1, 2, 5, 16}) {
    const CMatrix u = random_unitary(d, 90 + d).matrix();
    CHECK(max_abs(u * u.adjoint() - CMatrix::Identity(d, d)) < 1e-12);
  }
  for (int d : {2, 4, 16}) {
    const CMatrix u = random_traceless_unitary(d, 30 + d).matrix();
    CHECK(max_abs(u * u.adjoint() - CMatrix::Identity(d, d)) < 1e-12);
    CHECK(std::abs(u.trace()) < 1e-12);
  }
  CMatrix not_u = CMatrix::Identity(2, 2);
  not_u(0, 1) = 0.5;
  CHECK(kind_of([&] { UnitaryMatrix::validated(not_u); }) == ErrorKind::NotUnitary);
}

TEST_CASE("bell diagonal") {
  CHECK(max_abs(make_bell_diagonal(0, 0, 0).matrix() - CMatrix::Identity(4, 4) / 4.0) < 1e-15);
  CHECK(max_abs(make_bell_diagonal(1, -1, 1).matrix() - bell_phi_plus()) < 1e-15);
  const CMatrix xx = make_bell_diagonal(1, 0, 0).matrix();
  const CMatrix expect =
      (CMatrix::Identity(4, 4) + kron(pauli()[1], pauli()[1])) / 4.0;
  CHECK(max_abs(xx - expect) < 1e-15);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(xx);
  CHECK(es.eigenvalues()(0) == doctest::Approx(0.0));
  CHECK(es.eigenvalues()(3) == doctest::Approx(0.5));
  CHECK(kind_of([] { make_bell_diagonal(1, 1, 1); }) == ErrorKind::NotPositive);

  const DensityMatrix bd = make_bell_diagonal(0.6, -0.4, 0.2);
  for (int a = 1; a <= 3; ++a) {
    const double c = (bd.matrix() * kron(pauli()[a], pauli()[a])).trace().real();
    CHECK(c == doctest::Approx(std::array{0.0, 0.6, -0.4, 0.2}[a]));
  }
}

TEST_CASE("x states") {
  const XStateParams p{0, 0, 1, 0, 0};
  CHECK(max_abs(make_x_state(p).matrix() - make_bell_diagonal(1, 0, 0).matrix()) < 1e-15);

  // Entry formulas only; this parameter set is not positive.
  const CMatrix m = x_state_matrix({0.2, 0.1, 0.5, 0.3, 0.4});
  CHECK(m(0, 3).real() == doctest::Approx(0.05));
  CHECK(m(1, 2).real() == doctest::Approx(0.2));
  CHECK(m(0, 0).real() == doctest::Approx(1.7 / 4));
  CHECK(m(3, 3).real() == doctest::Approx(1.1 / 4));
  CHECK(kind_of([] { make_x_state({0.2, 0.1, 0.5, 0.3, 0.4}); }) == ErrorKind::NotPositive);

  const XStateParams q{0.2, 0.1, 0.4, 0.3, 0.2};
  const XStateParams back = x_state_expectations(make_x_state(q));
  CHECK(std::abs(back.x - q.x) < 1e-12);
  CHECK(std::abs(back.y - q.y) < 1e-12);
  CHECK(std::abs(back.s1 - q.s1) < 1e-12);
  CHECK(std::abs(back.s2 - q.s2) < 1e-12);
  CHECK(std::abs(back.s3 - q.s3) < 1e-12);
}

TEST_CASE("dqc1 state") {
  const UnitaryMatrix u = random_unitary(3, 8);
  const DensityMatrix zero = make_dqc1(u, 0.0);
  CHECK(max_abs(zero.matrix() - CMatrix::Identity(6, 6) / 6.0) < 1e-15);

  const UnitaryMatrix one = UnitaryMatrix::validated(CMatrix::Identity(1, 1));
  const DensityMatrix q = make_dqc1(one, 1.0);
  CHECK(max_abs(q.matrix() - (pauli()[0] + pauli()[1]) / 2.0) < 1e-15);

  const DensityMatrix t = make_dqc1(random_traceless_unitary(4, 2), 0.7);
  CHECK(max_abs(partial_trace(t, Subsystem::A) - CMatrix::Identity(2, 2) / 2.0) < 1e-12);

  // marginal of A from the block form: (1 + alpha Re TrU / d sigma_1 + alpha Im TrU / d sigma_2)/2
  const DensityMatrix g = make_dqc1(u, 0.8);
  const Complex tr = u.matrix().trace() / 3.0;
  const Vec3 x = bloch_vector(partial_trace(g, Subsystem::A));
  CHECK(x(0) == doctest::Approx(0.8 * tr.real()));
  CHECK(x(1) == doctest::Approx(0.8 * tr.imag()));
  CHECK(std::abs(x(2)) < 1e-15);

  CHECK(kind_of([&] { make_dqc1(u, 1.5); }) == ErrorKind::InvalidAlpha);
  CHECK(kind_of([&] { make_dqc1(u, -0.1); }) == ErrorKind::InvalidAlpha);
}

TEST_CASE("binary channel") {
  const DensityMatrix c = make_binary_channel(0.5, Vec3(0, 0, 1), Vec3(0, 0, -1));
  CHECK(std::abs(von_neumann_entropy(c) - 1.0) < 1e-12);
  const DensityMatrix same = make_binary_channel(0.5, Vec3(0.3, 0, 0), Vec3(0.3, 0, 0));
  const CMatrix prod = kron(partial_trace(same, Subsystem::A), partial_trace(same, Subsystem::B));
  CHECK(max_abs(same.matrix() - prod) < 1e-15);
  CHECK(kind_of([] { make_binary_channel(0.0, Vec3::Zero(), Vec3::Zero()); }) ==
        ErrorKind::InvalidProbability);
  CHECK(kind_of([] { make_binary_channel(0.5, Vec3(1, 1, 0), Vec3::Zero()); }) ==
        ErrorKind::InvalidBlochLength);
}

TEST_CASE("filters") {
  const DensityMatrix rho = random_state(2, 3, 77);
  CHECK(max_abs(apply_filter(rho, Matrix2c::Identity()).matrix() - rho.matrix()) < 1e-15);

  const Matrix2c u = random_unitary(2, 3).matrix();
  Eigen::SelfAdjointEigenSolver<CMatrix> e0(rho.matrix()), e1(apply_filter(rho, u).matrix());
  CHECK((e0.eigenvalues() - e1.eigenvalues()).cwiseAbs().maxCoeff() < 1e-13);

  Matrix2c f = Matrix2c::Zero();
  f(0, 0) = 1;
  f(1, 1) = 0.5;
  const DensityMatrix filtered =
      apply_filter(DensityMatrix::validated(bell_phi_plus(), 2), f);
  CHECK((bloch_vector(partial_trace(filtered, Subsystem::A)) - Vec3(0, 0, 0.6)).norm() < 1e-14);

  Matrix2c sing = Matrix2c::Zero();
  sing(0, 0) = 1;
  CHECK(kind_of([&] { apply_filter(rho, sing); }) == ErrorKind::SingularFilter);
}

TEST_CASE("purification") {
  for (int r = 1; r <= 4; ++r) {
    const DensityMatrix rho = random_state(2, r, 50 + r);
    const CVector psi = purify(rho);
    CHECK(std::abs(psi.norm() - 1) < 1e-12);
    CHECK(max_abs(trace_out_last(psi, 4) - rho.matrix()) < 1e-10);
    // Schmidt rank across AB:C
    const Eigen::Map<const CMatrix> m(psi.data(), 4, 4);  // column = AB index
    Eigen::JacobiSVD<CMatrix> svd(m);
    int rank = 0;
    for (double s : svd.singularValues()) rank += s > 1e-8;
    CHECK(rank == r);
  }
  const CVector mm = purify(DensityMatrix::validated(CMatrix::Identity(4, 4) / 4.0, 2));
  const Eigen::Map<const CMatrix> m(mm.data(), 4, 4);
  Eigen::JacobiSVD<CMatrix> svd(m);
  for (double s : svd.singularValues()) CHECK(s == doctest::Approx(0.5));
}

TEST_CASE("entropy bounded below by co of purity") {
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + i % 4;
    const DensityMatrix rho = random_state(d, 1 + (i / 4) % (2 * d), 900 + i);
    CHECK(von_neumann_entropy(rho) >= co(2 * rho.purity() - 1) - 1e-10);
  }
}
