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

#include "discord/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

CMatrix ginibre(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  // Fill row-major so the draw order does not depend on Eigen's storage.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix haar_unitary(int dim, std::mt19937_64& gen) {
  const CMatrix g = ginibre(dim, dim, gen);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0) q.col(j) *= rjj / mag;
  }
  return q;
}

}  // namespace

const std::array<Matrix2c, 4>& pauli() {
  static const std::array<Matrix2c, 4> sigma = [] {
    std::array<Matrix2c, 4> s;
    const Complex i(0, 1);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

DensityMatrix DensityMatrix::validated(CMatrix entries, int dim_b) {
  if (dim_b < 1 || entries.rows() != 2 * dim_b ||
      entries.cols() != 2 * dim_b) {
    throw Error(ErrorKind::WrongDimension,
                "expected a square matrix of size 2*dim_b = " +
                    std::to_string(2 * dim_b) + ", got " +
                    std::to_string(entries.rows()) + "x" +
                    std::to_string(entries.cols()));
  }
  const double herm = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStateTolerance) {
    throw Error(ErrorKind::NotHermitian,
                "max |rho - rho^dagger| = " + fmt_double(herm));
  }
  CMatrix h = (entries + entries.adjoint()) / 2.0;
  const Complex tr = h.trace();
  if (std::abs(tr - 1.0) > kStateTolerance) {
    throw Error(ErrorKind::NotUnitTrace,
                "|Tr rho - 1| = " + fmt_double(std::abs(tr - 1.0)));
  }
  const double lmin = min_eigenvalue(h);
  if (lmin < -kStateTolerance) {
    throw Error(ErrorKind::NotPositive,
                "minimum eigenvalue " + fmt_double(lmin));
  }
  return DensityMatrix(std::move(h), dim_b);
}

double DensityMatrix::purity() const {
  return (entries_ * entries_).trace().real();
}

UnitaryMatrix UnitaryMatrix::validated(CMatrix entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw Error(ErrorKind::WrongDimension, "unitary must be square");
  }
  const CMatrix id = CMatrix::Identity(entries.rows(), entries.cols());
  const double dev = (entries * entries.adjoint() - id).cwiseAbs().maxCoeff();
  if (dev > kStateTolerance) {
    throw Error(ErrorKind::NotUnitary,
                "max |U U^dagger - 1| = " + fmt_double(dev));
  }
  return UnitaryMatrix(std::move(entries));
}

CMatrix partial_trace(const CMatrix& op, int dim_b, Subsystem keep) {
  const int d = dim_b;
  if (keep == Subsystem::B) {
    return op.block(0, 0, d, d) + op.block(d, d, d, d);
  }
  CMatrix out(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      out(a, ap) = op.block(a * d, ap * d, d, d).trace();
    }
  }
  return out;
}

CMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return partial_trace(rho.matrix(), rho.dim_b(), keep);
}

std::array<CMatrix, 4> pauli_blocks(const CMatrix& op, int dim_b) {
  const int d = dim_b;
  const auto b00 = op.block(0, 0, d, d);
  const auto b01 = op.block(0, d, d, d);
  const auto b10 = op.block(d, 0, d, d);
  const auto b11 = op.block(d, d, d, d);
  const Complex i(0, 1);
  // Tr_A[(s (x) 1) op] = sum_{a,a'} s_{aa'} op_{(a',.),(a,.)}.
  return {CMatrix(b00 + b11), CMatrix(b10 + b01),
          CMatrix(i * b01 - i * b10), CMatrix(b00 - b11)};
}

double von_neumann_entropy(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0;
  for (const double lambda : es.eigenvalues()) {
    if (lambda < -kStateTolerance) {
      throw Error(ErrorKind::NotPositive,
                  "eigenvalue " + fmt_double(lambda) + " in entropy");
    }
    if (lambda > 0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0;
  for (const double p : probabilities) {
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

double binary_entropy(double p) {
  const double q = 1.0 - p;
  double s = 0;
  if (p > 0) s -= p * std::log2(p);
  if (q > 0) s -= q * std::log2(q);
  return s;
}

BlochVector bloch_vector(const CMatrix& rho_a) {
  if (rho_a.rows() != 2 || rho_a.cols() != 2) {
    throw Error(ErrorKind::WrongDimension, "Bloch vector needs a 2x2 matrix");
  }
  const auto& s = pauli();
  BlochVector x;
  for (int k = 0; k < 3; ++k) {
    x[k] = (s[k + 1] * rho_a).trace().real();
  }
  return x;
}

CMatrix qubit_from_bloch(const BlochVector& x) {
  const auto& s = pauli();
  Matrix2c m = s[0];
  for (int k = 0; k < 3; ++k) m += x[k] * s[k + 1];
  return CMatrix(m / 2.0);
}

DensityMatrix random_state(int dim_b, int rank, std::uint64_t seed) {
  if (dim_b < 1) {
    throw Error(ErrorKind::WrongDimension, "dim_b must be >= 1");
  }
  const int n = 2 * dim_b;
  if (rank < 1 || rank > n) {
    throw Error(ErrorKind::InvalidRank,
                "rank " + std::to_string(rank) + " not in [1, " +
                    std::to_string(n) + "]");
  }
  std::mt19937_64 gen(seed);
  const CMatrix g = ginibre(n, rank, gen);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::validated(std::move(rho), dim_b);
}

UnitaryMatrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return UnitaryMatrix::validated(haar_unitary(dim, gen));
}

UnitaryMatrix random_traceless_unitary(int dim, std::uint64_t seed) {
  if (dim < 2 || dim % 2 != 0) {
    throw Error(ErrorKind::WrongDimension,
                "traceless construction needs an even dimension");
  }
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  Eigen::VectorXcd diag(dim);
  for (int k = 0; k < dim / 2; ++k) {
    const double phi = phase(gen);
    diag[2 * k] = std::polar(1.0, phi);
    diag[2 * k + 1] = -diag[2 * k];
  }
  const CMatrix v = haar_unitary(dim, gen);
  return UnitaryMatrix::validated(v * diag.asDiagonal() * v.adjoint());
}

DensityMatrix make_bell_diagonal(double c1, double c2, double c3) {
  const std::array<double, 4> eig = {(1 - c1 - c2 - c3) / 4,
                                     (1 - c1 + c2 + c3) / 4,
                                     (1 + c1 - c2 + c3) / 4,
                                     (1 + c1 + c2 - c3) / 4};
  if (*std::min_element(eig.begin(), eig.end()) < -1e-12) {
    throw Error(ErrorKind::NotPositive,
                "Bell-diagonal (" + fmt_double(c1) + ", " + fmt_double(c2) +
                    ", " + fmt_double(c3) + ") has a negative eigenvalue");
  }
  const auto& s = pauli();
  CMatrix rho = kron(s[0], s[0]);
  rho += c1 * kron(s[1], s[1]) + c2 * kron(s[2], s[2]) +
         c3 * kron(s[3], s[3]);
  return DensityMatrix::validated(rho / 4.0, 2);
}

CMatrix x_state_matrix(const XStateParams& p) {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = (1 + p.x + p.y + p.s3) / 4;
  m(1, 1) = (1 + p.x - p.y - p.s3) / 4;
  m(2, 2) = (1 - p.x + p.y - p.s3) / 4;
  m(3, 3) = (1 - p.x - p.y + p.s3) / 4;
  m(0, 3) = m(3, 0) = (p.s1 - p.s2) / 4;
  m(1, 2) = m(2, 1) = (p.s1 + p.s2) / 4;
  return m;
}

DensityMatrix make_x_state(const XStateParams& p) {
  return DensityMatrix::validated(x_state_matrix(p), 2);
}

XStateParams x_state_expectations(const DensityMatrix& rho) {
  if (rho.dim_b() != 2) {
    throw Error(ErrorKind::WrongDimension, "X-state parameters need d = 2");
  }
  const auto& s = pauli();
  const auto expect = [&](int mu, int nu) {
    return (rho.matrix() * kron(s[mu], s[nu])).trace().real();
  };
  return XStateParams{expect(3, 0), expect(0, 3), expect(1, 1), expect(2, 2),
                      expect(3, 3)};
}

DensityMatrix make_dqc1(const UnitaryMatrix& u, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::InvalidAlpha,
                "alpha = " + fmt_double(alpha) + " not in [0, 1]");
  }
  const int d = u.dim();
  CMatrix rho(2 * d, 2 * d);
  rho.block(0, 0, d, d) = CMatrix::Identity(d, d);
  rho.block(d, d, d, d) = CMatrix::Identity(d, d);
  rho.block(0, d, d, d) = alpha * u.matrix().adjoint();
  rho.block(d, 0, d, d) = alpha * u.matrix();
  return DensityMatrix::validated(rho / (2.0 * d), d);
}

DensityMatrix make_binary_channel(double p1, const BlochVector& a,
                                  const BlochVector& b) {
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw Error(ErrorKind::InvalidProbability,
                "p1 = " + fmt_double(p1) + " not in (0, 1)");
  }
  for (const BlochVector* v : {&a, &b}) {
    if (v->norm() > 1.0 + kStateTolerance) {
      throw Error(ErrorKind::InvalidBlochLength,
                  "Bloch length " + fmt_double(v->norm()) + " > 1");
    }
  }
  const CMatrix ra = qubit_from_bloch(a);
  const CMatrix rb = qubit_from_bloch(b);
  CMatrix rho = CMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rho(2 * i, 2 * j) = p1 * ra(i, j);
      rho(2 * i + 1, 2 * j + 1) = (1 - p1) * rb(i, j);
    }
  }
  return DensityMatrix::validated(rho, 2);
}

DensityMatrix apply_filter(const DensityMatrix& rho, const Matrix2c& filter) {
  if (std::abs(filter.determinant()) <= 1e-12) {
    throw Error(ErrorKind::SingularFilter,
                "|det F| = " + fmt_double(std::abs(filter.determinant())));
  }
  const CMatrix full =
      kron(CMatrix(filter), CMatrix::Identity(rho.dim_b(), rho.dim_b()));
  CMatrix out = full * rho.matrix() * full.adjoint();
  out /= out.trace().real();
  return DensityMatrix::validated(std::move(out), rho.dim_b());
}

DensityMatrix conjugate_local(const DensityMatrix& rho, const CMatrix& va,
                              const CMatrix& vb) {
  const CMatrix v = kron(va, vb);
  return DensityMatrix::validated(v * rho.matrix() * v.adjoint(),
                                  rho.dim_b());
}

CVector purify(const DensityMatrix& rho) {
  const int n = rho.dim();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double lambda = std::max(0.0, es.eigenvalues()[i]);
    if (lambda == 0.0) continue;
    const double amp = std::sqrt(lambda);
    for (int ab = 0; ab < n; ++ab) {
      psi[ab * n + i] = amp * es.eigenvectors()(ab, i);
    }
  }
  return psi / psi.norm();
}

CMatrix trace_out_last(const CVector& psi, int dim_ab) {
  const Eigen::Index dim_c = psi.size() / dim_ab;
  // psi reshaped as (dim_ab x dim_c), row-major.
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      m(psi.data(), dim_ab, dim_c);
  return m * m.adjoint();
}

}  // namespace discord
