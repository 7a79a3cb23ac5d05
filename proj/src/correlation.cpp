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

#include "discord/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {

namespace {

void require_two_qubit(int dim_b, const char* what) {
  if (dim_b != 2) {
    throw Error(ErrorKind::WrongDimension,
                std::string(what) + " is defined for two-qubit states only");
  }
}

}  // namespace

const Mat4& eta() {
  static const Mat4 m = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  return m;
}

FilteredState filtered_state(const DensityMatrix& rho) {
  const CMatrix rho_a = partial_trace(rho, Subsystem::A);
  const Matrix2c rho_a2 = rho_a;
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(rho_a2);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin < kMarginalFloor) {
    std::ostringstream os;
    os << "min eigenvalue of rho_A = " << lmin;
    throw Error(ErrorKind::SingularMarginal, os.str());
  }
  const Eigen::Vector2d inv_sqrt =
      (2.0 * es.eigenvalues()).cwiseSqrt().cwiseInverse();
  const Matrix2c k = es.eigenvectors() * inv_sqrt.asDiagonal() *
                     es.eigenvectors().adjoint();
  const int d = rho.dim_b();
  FilteredState out{CMatrix(rho.dim(), rho.dim()), d};
  // (K (x) 1) rho (K (x) 1), block by block.
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      CMatrix blk = CMatrix::Zero(d, d);
      for (int c = 0; c < 2; ++c) {
        for (int cp = 0; cp < 2; ++cp) {
          blk += k(a, c) * rho.matrix().block(c * d, cp * d, d, d) *
                 std::conj(k(ap, cp));
        }
      }
      out.matrix.block(a * d, ap * d, d, d) = blk;
    }
  }
  return out;
}

QMatrix q_matrix(const CMatrix& op, int dim_b) {
  const auto blocks = pauli_blocks(op, dim_b);
  std::array<double, 4> tr{};
  for (int mu = 0; mu < 4; ++mu) tr[mu] = blocks[mu].trace().real();
  QMatrix q;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      // Tr(B_mu B_nu) for Hermitian blocks is real.
      const double cross =
          (blocks[mu].transpose().cwiseProduct(blocks[nu])).sum().real();
      q.entries(mu, nu) = q.entries(nu, mu) = 2.0 * (tr[mu] * tr[nu] - cross);
    }
  }
  return q;
}

QMatrix q_matrix(const DensityMatrix& rho) {
  return q_matrix(rho.matrix(), rho.dim_b());
}

QMatrix q_matrix(const FilteredState& filtered) {
  return q_matrix(filtered.matrix, filtered.dim_b);
}

QMatrix q_matrix_swap_reference(const CMatrix& op, int dim_b) {
  const int d = dim_b;
  if (d > 64) {
    throw Error(ErrorKind::DimensionTooLarge,
                "swap reference needs d <= 64, got " + std::to_string(d));
  }
  const int dd = d * d;
  // V_{(b1 b2),(c1 c2)} = delta_{b1 c2} delta_{b2 c1}.
  CMatrix one_minus_swap = CMatrix::Identity(dd, dd);
  for (int b1 = 0; b1 < d; ++b1) {
    for (int b2 = 0; b2 < d; ++b2) {
      one_minus_swap(b1 * d + b2, b2 * d + b1) -= 1.0;
    }
  }
  // O = 2 Tr_{B1B2}[(1 - V) rho (x) rho] on A1 A2. The (a1 a2, a1' a2')
  // block of rho (x) rho, reordered to A1 A2 B1 B2, is
  // rho_{a1 a1'} (x) rho_{a2 a2'}.
  CMatrix o(4, 4);
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      for (int a1p = 0; a1p < 2; ++a1p) {
        for (int a2p = 0; a2p < 2; ++a2p) {
          const CMatrix r1 = op.block(a1 * d, a1p * d, d, d);
          const CMatrix r2 = op.block(a2 * d, a2p * d, d, d);
          CMatrix prod(dd, dd);
          for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
              prod.block(i * d, j * d, d, d) = r1(i, j) * r2;
            }
          }
          o(a1 * 2 + a2, a1p * 2 + a2p) =
              2.0 * (one_minus_swap * prod).trace();
        }
      }
    }
  }
  const auto& s = pauli();
  QMatrix q;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Eigen::Matrix4cd ss;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          ss.block(i * 2, j * 2, 2, 2) = s[mu](i, j) * s[nu];
        }
      }
      q.entries(mu, nu) = (o * ss).trace().real();
    }
  }
  return q;
}

QMatrix q_matrix_swap_reference(const DensityMatrix& rho) {
  return q_matrix_swap_reference(rho.matrix(), rho.dim_b());
}

Mat4 r_matrix(const CMatrix& op, int dim_b) {
  require_two_qubit(dim_b, "R matrix");
  const auto blocks = pauli_blocks(op, dim_b);
  const auto& s = pauli();
  Mat4 r;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      r(mu, nu) = (blocks[mu] * s[nu]).trace().real();
    }
  }
  return r;
}

Mat4 r_matrix(const DensityMatrix& rho) {
  return r_matrix(rho.matrix(), rho.dim_b());
}

Mat3 t_matrix(const FilteredState& filtered) {
  return r_matrix(filtered.matrix, filtered.dim_b).bottomRightCorner<3, 3>();
}

LorentzSpectrum lorentz_spectrum(const QMatrix& q) {
  const Mat4 m = eta() * q.entries;
  Eigen::EigenSolver<Mat4> es(m, false);
  LorentzSpectrum out;
  for (int i = 0; i < 4; ++i) {
    const Complex v = es.eigenvalues()[i];
    if (std::abs(v.imag()) > 1e-8) {
      std::ostringstream os;
      os << "eigenvalue " << v.real() << " + " << v.imag()
         << "i of eta Q is not real";
      throw Error(ErrorKind::ComplexSpectrum, os.str());
    }
    out.q[i] = v.real();
  }
  std::sort(out.q.begin(), out.q.end(), std::greater<>());
  return out;
}

MeasurementDirection t1_direction(const FilteredState& filtered,
                                  const BlochVector& x) {
  const QMatrix q = q_matrix(filtered);
  const Mat3 q3 = -q.entries.bottomRightCorner<3, 3>();
  Eigen::SelfAdjointEigenSolver<Mat3> es(q3);
  MeasurementDirection dir;
  dir.t1 = es.eigenvalues()[2];
  Vec3 e = es.eigenvectors().col(2);
  Eigen::Index k = 0;
  e.cwiseAbs().maxCoeff(&k);
  if (e[k] < 0) e = -e;
  dir.e = e;
  const double x2 = x.squaredNorm();
  if (std::sqrt(x2) < 1e-12) {
    dir.m = e;
    return dir;
  }
  const Vec3 e_par = x * (x.dot(e) / x2);
  const Vec3 e_perp = e - e_par;
  dir.m = (std::sqrt(std::max(0.0, 1.0 - x2)) * e_perp + e_par).normalized();
  return dir;
}

}  // namespace discord
