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

// Subcommand bodies for the impactpower executable. Each returns the process
// exit code: 0 success, 1 failed verification, 2 invalid input.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "impactpower/linalg.hpp"
#include "impactpower/verify.hpp"

namespace impactpower::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Explicit flag, else IMPACTPOWER_SEED, else kDefaultSeed. Throws ParseError
/// for an unparsable environment value.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Parses "AxB".
Dims parse_dims(const std::string& text);

struct ComputeOptions {
  std::filesystem::path state_file;
  std::optional<std::filesystem::path> hamiltonian_file;
  std::size_t time_samples = 33;
};

int run_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);

struct ScanOptions {
  std::string family;  // werner | isotropic | random
  std::size_t grid = 101;
  std::size_t dim = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string dims = "2x2";
  std::optional<std::size_t> rank;
  std::optional<std::filesystem::path> out_file;
};

int run_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  verify::Budget budget = verify::Budget::quick;
  /// Test hook: feeds 1.1 * 1/4 through state validation.
  bool inject_corrupt_trace = false;
};

/// Writes the JSON summary to `out`, the worst failing case to `err`.
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace impactpower::cli
