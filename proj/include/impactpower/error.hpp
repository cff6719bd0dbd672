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

#include <stdexcept>
#include <string>
#include <string_view>

namespace impactpower {

enum class ErrorKind {
  not_hermitian,
  no_convergence,
  dimension_mismatch,
  not_normalized,
  out_of_range,
  invalid_trace,
  not_positive,
  degenerate_hamiltonian,
  parse_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_hermitian: return "NotHermitian";
    case ErrorKind::no_convergence: return "NoConvergence";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::not_normalized: return "NotNormalized";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::invalid_trace: return "InvalidTrace";
    case ErrorKind::not_positive: return "NotPositive";
    case ErrorKind::degenerate_hamiltonian: return "DegenerateHamiltonian";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace impactpower
