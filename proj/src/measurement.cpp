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

#include "discord/measurement.hpp"

#include <sstream>

#include "discord/errors.hpp"

namespace discord {

Povm Povm::validated(std::vector<Matrix2c> elements) {
  if (elements.empty()) {
    throw Error(ErrorKind::InvalidPovm, "empty POVM");
  }
  Matrix2c sum = Matrix2c::Zero();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Matrix2c& e = elements[i];
    const double herm = (e - e.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Matrix2c> es((e + e.adjoint()) / 2.0,
                                               Eigen::EigenvaluesOnly);
    if (herm > kStateTolerance || es.eigenvalues().minCoeff() < -kStateTolerance) {
      std::ostringstream os;
      os << "element " << i << " is not positive semi-definite";
      throw Error(ErrorKind::InvalidPovm, os.str());
    }
    sum += e;
  }
  const double dev = (sum - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  if (dev > kStateTolerance) {
    std::ostringstream os;
    os << "elements sum to identity only within " << dev;
    throw Error(ErrorKind::InvalidPovm, os.str());
  }
  return Povm(std::move(elements));
}

Povm Povm::projective(const Vec3& m) {
  const Vec3 n = m.normalized();
  return Povm({element_from_coefficients(rank_one_coefficients(1.0, n)),
               element_from_coefficients(rank_one_coefficients(1.0, -n))});
}

std::vector<Vec4> Povm::coefficients() const {
  const auto& s = pauli();
  std::vector<Vec4> out;
  out.reserve(elements_.size());
  for (const Matrix2c& e : elements_) {
    Vec4 c;
    for (int mu = 0; mu < 4; ++mu) c[mu] = (e * s[mu]).trace().real();
    out.push_back(c);
  }
  return out;
}

Matrix2c element_from_coefficients(const Vec4& c) {
  const auto& s = pauli();
  Matrix2c e = Matrix2c::Zero();
  for (int mu = 0; mu < 4; ++mu) e += c[mu] * s[mu];
  return e / 2.0;
}

bool close_povm(std::vector<Vec4>& coefficients) {
  // Identity has coefficients (2, 0, 0, 0).
  Vec4 rest(2.0, 0.0, 0.0, 0.0);
  for (const Vec4& c : coefficients) rest -= c;
  // (r0 sigma_0 + r.sigma)/2 is PSD iff r0 >= |r|.
  if (rest[0] < rest.tail<3>().norm() - 1e-12) return false;
  coefficients.push_back(rest);
  return true;
}

}  // namespace discord
