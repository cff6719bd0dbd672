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

#include <cstddef>
#include <string_view>
#include <vector>

#include "impactpower/linalg.hpp"
#include "impactpower/random.hpp"
#include "impactpower/states.hpp"

namespace impactpower {

/// Relative gap below which two energies count as the same level.
inline constexpr double kRelativeGapTol = 1e-10;

struct EnergyLevel {
  double energy = 0.0;
  ComplexMatrix projector;  // on A alone
};

/// H_A = sum_i E_i Pi_i, stored by its spectral decomposition. Projectors act
/// on A only; they are embedded as Pi_i (x) 1_B when applied to a state.
class LocalHamiltonian {
 public:
  /// Validates Pi_i Pi_j = delta_ij Pi_i and sum_i Pi_i = 1 to 1e-10.
  LocalHamiltonian(std::vector<double> energies, std::vector<ComplexMatrix> projectors);

  /// Spectral decomposition of a Hermitian matrix on A (rank-1 projectors).
  static LocalHamiltonian from_matrix(const ComplexMatrix& h);
  /// Energies in the computational basis of A.
  static LocalHamiltonian diagonal(std::span<const double> energies);
  /// Qubit Hamiltonian with energy 0 on (1 + r.s)/2 and `gap` on (1 - r.s)/2.
  static LocalHamiltonian qubit(const Vec3& axis, double gap = 1.0);

  std::size_t dim_a() const noexcept { return dim_a_; }
  const std::vector<double>& energies() const noexcept { return energies_; }
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }

  /// 1e-10 * max |E_i|
  double gap_tol() const;
  /// min_{i != j} |E_i - E_j| > gap_tol over the stored energies.
  bool nondegenerate() const;
  /// Nondegenerate with one rank-1 projector per basis state of A.
  bool fully_nondegenerate() const;
  /// Distinct energies ascending; projectors of equal energies are merged.
  std::vector<EnergyLevel> levels() const;

  ComplexMatrix matrix() const;
  /// U H U^dagger for a unitary U on A.
  LocalHamiltonian conjugated(const ComplexMatrix& u) const;
  /// Energies mapped to scale * E + shift.
  LocalHamiltonian rescaled(double scale, double shift) const;

 private:
  std::size_t dim_a_ = 0;
  std::vector<double> energies_;
  std::vector<ComplexMatrix> projectors_;
};

/// Random Hamiltonian on A with Haar eigenbasis and energies drawn uniformly
/// from [-1, 1] with every pairwise gap at least `min_gap`.
LocalHamiltonian random_nondegenerate_hamiltonian(std::size_t dim_a, Rng& rng,
                                                  double min_gap = 0.05);

/// Time-independent data of the impact profile
///   I(t) = a - sum_{l>k} b_lk cos((E_l - E_k) t)
/// over the distinct levels of H.
struct ImpactCoefficients {
  double a = 0.0;
  std::vector<double> level_energies;
  std::vector<double> b;  // b[l * n + k] for l > k, zero elsewhere

  std::size_t level_count() const noexcept { return level_energies.size(); }
  double b_at(std::size_t l, std::size_t k) const { return b[l * level_count() + k]; }
  double sum_b() const;
  double max_b() const;
  /// Smallest gap between distinct levels (0 for a single level).
  double min_gap() const;
  /// a - sum b_lk cos(dE_lk t)
  double profile(double t) const;
};

enum class PowerMethod {
  trivial,              // H proportional to the identity
  closed_form,          // two distinct levels
  numeric_lower_bound,  // three or more levels; value is attained at t_max
};

std::string_view to_string(PowerMethod method);

struct ImpactPower {
  double value = 0.0;
  double t_max = 0.0;
  /// Analytic ceiling (2a for the Hilbert-Schmidt impact).
  double upper_bound = 0.0;
  PowerMethod method = PowerMethod::trivial;
};

struct TimeSearchOptions {
  std::size_t grid_points = 100000;
  double t_tol = 1e-12;
};

/// e^{-iH t} rho e^{iH t} with U = sum_i e^{-i E_i t} Pi_i (x) 1_B.
DensityMatrix evolve(const DensityMatrix& rho, const LocalHamiltonian& h, double t);

/// (1/2) ||rho(t) - rho||^2 in the Hilbert-Schmidt norm.
double impact(const DensityMatrix& rho, const LocalHamiltonian& h, double t);

ImpactCoefficients impact_coefficients(const DensityMatrix& rho, const LocalHamiltonian& h);

/// max_t impact. Exact (2a at t = pi / dE) for two distinct levels; for more
/// levels the trigonometric profile is maximized on a time grid over one
/// period of the smallest gap, plus the half periods pi / dE_lk, and polished
/// by golden-section search. The numeric value is attained, hence a lower
/// bound of the supremum.
ImpactPower impact_power(const DensityMatrix& rho, const LocalHamiltonian& h,
                         const TimeSearchOptions& options = {});

/// Same maximization as impact_power, starting from precomputed coefficients.
ImpactPower maximize_profile(const ImpactCoefficients& coeffs, const TimeSearchOptions& options = {});

/// (1/2) ||rho(t) - rho||_1^2
double trace_impact(const DensityMatrix& rho, const LocalHamiltonian& h, double t);

/// max_t trace_impact. For two levels the difference rho(t) - rho is
/// |e^{i dE t} - 1| times an operator whose spectrum does not depend on t, so
/// the maximum sits at t = pi / dE. Otherwise a direct time grid (default
/// 2048 points) with golden-section polish, labelled a lower bound.
ImpactPower trace_impact_power(const DensityMatrix& rho, const LocalHamiltonian& h,
                               std::size_t grid_points = 2048);

}  // namespace impactpower
