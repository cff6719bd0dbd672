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

// Seeded verification batteries. Each check runs an ensemble, records the
// signed margin of every case (tolerance minus error, so negative means a
// violation) and keeps the worst case together with the seed that replays it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "impactpower/linalg.hpp"

namespace impactpower::verify {

enum class Budget { quick, full };

struct CheckResult {
  std::string name;
  int criterion = 0;
  std::string description;
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;
  std::size_t worst_index = 0;
  std::uint64_t worst_seed = 0;
  std::string detail;

  bool passed() const noexcept { return failures == 0; }
};

struct SuiteSummary {
  std::string suite;
  std::uint64_t seed = 0;
  Budget budget = Budget::quick;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Test hooks for exercising failure reporting.
struct Hooks {
  /// Matrix fed to the state-validation check (expected to pass validation).
  std::optional<ComplexMatrix> injected_state;
  Dims injected_dims{2, 2};
};

/// Suites: all, theorem1, theorem2, theorem3, general-dim, trace-norm.
const std::vector<std::string>& suite_names();

/// Throws OutOfRange for an unknown suite name.
SuiteSummary run_suite(std::string_view suite, std::uint64_t seed, Budget budget,
                       const Hooks& hooks = {});

/// Checks belonging to one numbered acceptance criterion (1-10).
std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed, Budget budget);

nlohmann::json to_json(const SuiteSummary& summary);

std::string_view to_string(Budget budget);

}  // namespace impactpower::verify
