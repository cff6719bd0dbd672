// Copyright 2026 The impactpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// File formats:
//   state:       {"dims": [dA, dB], "matrix": [[re, im], ...]}   row-major
//   Hamiltonian: {"dA": n, "energies": [...], "projectors": [[[re, im], ...], ...]}
//                or {"dA": 2, "bloch_axis": [rx, ry, rz], "gap": dE}
// Numbers are written with 12 significant digits.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "impactpower/correlations.hpp"
#include "impactpower/dynamics.hpp"
#include "impactpower/states.hpp"

namespace impactpower::io {

/// Throws ParseError for malformed JSON or schema violations and the state
/// validation errors for invalid density matrices.
DensityMatrix parse_state(std::string_view text);
DensityMatrix load_state(const std::filesystem::path& path);
nlohmann::json state_to_json(const DensityMatrix& rho);

LocalHamiltonian parse_hamiltonian(std::string_view text);
LocalHamiltonian load_hamiltonian(const std::filesystem::path& path);

/// "%.12g"
std::string format_number(double value);
/// The value that format_number prints, so JSON dumps carry 12 digits.
double round_to_output(double value);

nlohmann::json report_to_json(const CorrelationReport& report);

}  // namespace impactpower::io
