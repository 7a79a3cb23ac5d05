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

#include "discord/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("matrix") || !j["matrix"].is_array()) {
    throw Error(ErrorKind::ParseError, "missing \"matrix\" array");
  }
  const auto& rows = j["matrix"];
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw Error(ErrorKind::ParseError, "empty matrix");
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorKind::ParseError,
                  "row " + std::to_string(r) + " does not have " +
                      std::to_string(n) + " entries");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
          !z[1].is_number()) {
        throw Error(ErrorKind::ParseError,
                    "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                        ") is not a [re, im] pair");
      }
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

std::string matrix_text(const CMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << "[" << number(m(r, c).real()) << ", " << number(m(r, c).imag())
         << "]";
    }
    os << "]";
  }
  os << "\n  ]";
  return os.str();
}

nlohmann::json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  }
  out << text;
}

}  // namespace

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim_b") ||
      !j["dim_b"].is_number_integer()) {
    throw Error(ErrorKind::ParseError, "missing integer \"dim_b\"");
  }
  if (j.contains("dim_a") && j["dim_a"] != 2) {
    throw Error(ErrorKind::WrongDimension, "only dim_a = 2 is supported");
  }
  return DensityMatrix::validated(matrix_from_json(j), j["dim_b"].get<int>());
}

UnitaryMatrix unitary_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected an object");
  return UnitaryMatrix::validated(matrix_from_json(j));
}

std::string state_to_json_text(const DensityMatrix& rho) {
  return "{\n  \"dim_a\": 2,\n  \"dim_b\": " + std::to_string(rho.dim_b()) +
         ",\n  \"matrix\": " + matrix_text(rho.matrix()) + "\n}\n";
}

std::string unitary_to_json_text(const UnitaryMatrix& u) {
  return "{\n  \"matrix\": " + matrix_text(u.matrix()) + "\n}\n";
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  return state_from_json(parse_file(path));
}

UnitaryMatrix read_unitary_file(const std::filesystem::path& path) {
  return unitary_from_json(parse_file(path));
}

void write_state_file(const std::filesystem::path& path,
                      const DensityMatrix& rho) {
  write_text(path, state_to_json_text(rho));
}

void write_unitary_file(const std::filesystem::path& path,
                        const UnitaryMatrix& u) {
  write_text(path, unitary_to_json_text(u));
}

nlohmann::json q_matrix_to_json(const QMatrix& q) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) row.push_back(q.entries(i, k));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace discord
