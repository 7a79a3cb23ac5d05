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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "discord/correlation.hpp"
#include "discord/qstate.hpp"

namespace discord {

// State files: {"dim_a": 2, "dim_b": d, "matrix": [[[re, im], ...], ...]}
// row-major. Unitary files carry only "matrix". Numbers are written with 17
// significant digits.

DensityMatrix state_from_json(const nlohmann::json& j);
UnitaryMatrix unitary_from_json(const nlohmann::json& j);

std::string state_to_json_text(const DensityMatrix& rho);
std::string unitary_to_json_text(const UnitaryMatrix& u);

DensityMatrix read_state_file(const std::filesystem::path& path);
UnitaryMatrix read_unitary_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path,
                      const DensityMatrix& rho);
void write_unitary_file(const std::filesystem::path& path,
                        const UnitaryMatrix& u);

nlohmann::json q_matrix_to_json(const QMatrix& q);

}  // namespace discord
