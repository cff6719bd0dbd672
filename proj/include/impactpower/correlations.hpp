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

#include <cstdint>
#include <optional>
#include <string_view>

#include "impactpower/dynamics.hpp"
#include "impactpower/linalg.hpp"
#include "impactpower/search.hpp"
#include "impactpower/states.hpp"

namespace impactpower {

/// Absolute tolerance for declaring the purity bound saturated.
inline constexpr double kSaturationTol = 1e-9;

/// Unit Bloch vector r selecting the projectors (1 +- r.s)/2 on a qubit A.
class MeasurementAxis {
 public:
  /// Throws OutOfRange unless | |r| - 1 | <= 1e-12.
  explicit MeasurementAxis(const Vec3& r);
  /// Normalizes any nonzero vector.
  static MeasurementAxis normalized(const Vec3& v);

  const Vec3& r() const noexcept { return r_; }

 private:
  Vec3 r_;
};

/// M_ij = Tr[rho s_i^A rho s_j^A] for qubit A, with its spectrum.
struct MMatrix {
  Mat3 m{};
  Vec3 eigenvalues{};                 // ascending m1 <= m2 <= m3
  std::array<Vec3, 3> eigenvectors{};  // eigenvectors[k] pairs with eigenvalues[k]
  double max_imag = 0.0;              // largest |Im| seen in the defining traces
};

/// Throws DimensionMismatch unless d_A = 2.
MMatrix m_matrix(const DensityMatrix& rho);

/// Tr[rho^2] - r^T M r: the impact power of any nondegenerate qubit H whose
/// eigenprojectors are (1 +- r.s)/2.
double axis_impact_power(const MMatrix& m, double purity, const MeasurementAxis& axis);

struct PExtrema {
  double p_min = 0.0;
  double p_max = 0.0;
  Vec3 min_axis{};  // attains p_min (top eigenvector of M)
  Vec3 max_axis{};  // attains p_max (bottom eigenvector of M)
};

/// p_min = Tr[rho^2] - m3, p_max = Tr[rho^2] - m1. Within a degenerate
/// eigenspace the reported axis is its lexicographically smallest unit vector.
PExtrema p_extrema(const DensityMatrix& rho);

enum class DiscordMethod { closed_form, numeric };
std::string_view to_string(DiscordMethod method);

struct Discord {
  double value = 0.0;
  DiscordMethod method = DiscordMethod::closed_form;
};

struct MeasurementSearchOptions {
  std::size_t starts = 64;   // Haar-random orthonormal bases screened
  std::size_t refined = 4;   // best starts refined by compass descent
  std::uint64_t seed = 0x1dca5eedULL;
  search::CompassOptions compass{0.1, 1e-8, 2'000'000};
};

struct MeasurementDiscord {
  double value = 0.0;
  ComplexMatrix basis;  // columns: the measurement basis on A
};

/// min over rank-1 projective measurements {|v_i><v_i|} on A of
/// ||rho - sum_i Pi_i rho Pi_i||^2. Any value returned is attained by the
/// returned basis, so it upper-bounds the von Neumann minimum.
MeasurementDiscord measurement_discord(const DensityMatrix& rho,
                                       const MeasurementSearchOptions& options = {});

/// Closed form p_min / 2 for qubit A; measurement_discord otherwise.
Discord geometric_discord(const DensityMatrix& rho, const MeasurementSearchOptions& options = {});

struct KMatrix {
  Mat3 k{};
  double k_max = 0.0;
};

/// K = x x^T + T T^T
KMatrix k_matrix(const BlochTwoQubit& b);

/// (1/4)(|x|^2 + ||T||^2 - k_max) for two qubits.
double k_matrix_discord(const DensityMatrix& rho);

struct BoundCheck {
  double lhs = 0.0;  // p_min
  double rhs = 0.0;  // (4/3) Tr[rho^2] - 1/3
  bool saturates = false;
};

BoundCheck purity_bound_check(const DensityMatrix& rho);

struct GeneralDimBound {
  double power = 0.0;
  double bound = 0.0;  // 4 D / (d_A (d_A - 1))
  double discord = 0.0;
  DiscordMethod discord_method = DiscordMethod::closed_form;
  PowerMethod power_method = PowerMethod::closed_form;
  double margin = 0.0;  // power - bound
  bool holds = false;
};

/// Throws DegenerateHamiltonian unless H has d_A distinct energies.
GeneralDimBound general_dim_bound_check(const DensityMatrix& rho, const LocalHamiltonian& h,
                                        double tol = 1e-6,
                                        const MeasurementSearchOptions& options = {});

/// Trace-norm counterpart of p_min: min over `samples` Fibonacci-lattice axes
/// of the trace impact power of H_r. Sampling only, so it upper-bounds the
/// true minimum.
double trace_p_min_sampled(const DensityMatrix& rho, std::size_t samples);

struct CorrelationReport {
  Dims dims;
  double purity = 0.0;
  std::optional<double> p_min;  // qubit A only
  std::optional<double> p_max;  // qubit A only
  double discord = 0.0;
  std::optional<double> bound_rhs;       // two qubits only
  std::optional<bool> saturates_bound;  // two qubits only
  DiscordMethod method = DiscordMethod::closed_form;
};

CorrelationReport report(const DensityMatrix& rho, const MeasurementSearchOptions& options = {});

}  // namespace impactpower
