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

// Brute-force reference implementations. Nothing here calls into the
// dynamics or correlations modules: evolution goes through a Taylor series
// exponential, impacts and dephasings are recomputed from their definitions,
// and the extrema come from direct searches.

#include <cstdint>

#include "impactpower/dynamics.hpp"
#include "impactpower/linalg.hpp"
#include "impactpower/search.hpp"
#include "impactpower/states.hpp"

namespace impactpower::oracle {

/// exp(A) by scaling and squaring of a truncated Taylor series.
ComplexMatrix expm(const ComplexMatrix& a);

/// exp(-i H t) (x) 1_B applied by conjugation, H assembled from its spectral data.
DensityMatrix unitary_expm_evolve(const DensityMatrix& rho, const LocalHamiltonian& h, double t);

struct TimeMax {
  double value = 0.0;
  double t = 0.0;
};

/// Max of (1/2)||rho(t) - rho||^2 over a uniform grid on (0, 2 pi / min_gap]
/// followed by golden-section polish. Throws DegenerateHamiltonian unless the
/// stored energies are pairwise distinct.
TimeMax impact_power_grid(const DensityMatrix& rho, const LocalHamiltonian& h,
                          std::size_t grid_points);

struct AxisSearch {
  double value = 0.0;
  Vec3 axis{};
};

struct AxisSearchOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  search::CompassOptions compass{0.1, 1e-8, 200'000};
};

/// Jittered Fibonacci lattice: the standard lattice under a seeded random rotation.
std::vector<Vec3> jittered_fibonacci_axes(std::size_t samples, std::uint64_t seed);

/// min over axes r of 2 ||rho - Phi_r(rho)||^2, Phi_r the dephasing in the
/// eigenbasis of r.s: lattice screening then compass refinement of the best axis.
AxisSearch p_min_search(const DensityMatrix& rho, const AxisSearchOptions& options);

/// max over axes of the time-grid impact power of H_r = (1 - r.s)/2. Axes are
/// screened and refined on the dephasing distance; the reported value is
/// impact_power_grid at the winning axis.
AxisSearch p_max_search(const DensityMatrix& rho, const AxisSearchOptions& options,
                        std::size_t grid_points = 64);

struct CqSearchOptions {
  std::size_t samples = 64;  // random starting points
  std::size_t refined = 4;   // best starts handed to compass descent
  std::uint64_t seed = 0;
  search::CompassOptions compass{0.1, 1e-8, 2'000'000};
};

struct CqSearch {
  double value = 0.0;
  ComplexMatrix closest;  // the minimizing CQ state
};

/// min ||rho - omega||^2 over two-qubit CQ states
///   omega = p Pi_0 (x) (1 + s_0.s)/2 + (1 - p) Pi_1 (x) (1 + s_1.s)/2,
/// parameterized by the measurement axis, p and the two B Bloch vectors.
CqSearch discord_cq_search(const DensityMatrix& rho, const CqSearchOptions& options);

}  // namespace impactpower::oracle
