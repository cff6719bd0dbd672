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

// Acceptance suite: runs every acceptance criterion at its stated size and
// tolerance and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>

#include "impactpower/verify.hpp"

namespace {

using impactpower::verify::Budget;
using impactpower::verify::CheckResult;

constexpr std::uint64_t kSeed = 42;

// Runtime ceilings in seconds, where the criterion states one.
const std::map<int, double> kRuntimeLimits = {{1, 1.0}, {2, 60.0}, {6, 300.0}};

}  // namespace

int main() {
  int failed = 0;
  for (int criterion = 1; criterion <= 10; ++criterion) {
    const auto start = std::chrono::steady_clock::now();
    const auto checks = impactpower::verify::run_criterion(criterion, kSeed, Budget::full);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = true;
    for (const CheckResult& c : checks) {
      ok = ok && c.passed();
      std::printf("    %-22s cases=%-6zu failures=%-4zu tol=%-8.1e worst_margin=%.3e%s\n", c.name.c_str(), c.cases,
                  c.failures, c.tolerance, c.worst_margin, c.passed() ? "" : "  <--");
      if (!c.passed()) {
        std::printf("      worst case index %zu seed %llu %s\n", c.worst_index,
                    static_cast<unsigned long long>(c.worst_seed), c.detail.c_str());
      }
    }
    std::optional<double> limit;
    if (auto it = kRuntimeLimits.find(criterion); it != kRuntimeLimits.end()) limit = it->second;
    const bool in_time = !limit || seconds < *limit;
    if (!in_time) std::printf("    runtime %.2f s exceeds %.0f s\n", seconds, *limit);
    ok = ok && in_time;
    std::printf("[%s] criterion %2d (%.2f s)\n", ok ? "PASS" : "FAIL", criterion, seconds);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
