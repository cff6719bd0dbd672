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

#include "impactpower/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "impactpower/error.hpp"
#include "impactpower/kernels.hpp"
#include "impactpower/random.hpp"

namespace impactpower::oracle {

namespace {

double max_column_sum(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

ComplexMatrix evolved_matrix(const DensityMatrix& rho, const ComplexMatrix& h_matrix, double t) {
  const ComplexMatrix u_a = expm(h_matrix * Complex(0.0, -t));
  const ComplexMatrix u = tensor(u_a, ComplexMatrix::identity(rho.dims().b));
  return u * rho.matrix() * u.adjoint();
}

double direct_impact(const DensityMatrix& rho, const ComplexMatrix& h_matrix, double t) {
  return 0.5 * hs_norm_sq(evolved_matrix(rho, h_matrix, t) - rho.matrix());
}

std::pair<ComplexMatrix, ComplexMatrix> axis_projectors(const Vec3& r) {
  ComplexMatrix rs(2, 2);
  for (std::size_t i = 0; i < 3; ++i) rs += pauli(i) * Complex(r[i]);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return {(id + rs) * Complex(0.5), (id - rs) * Complex(0.5)};
}

/// 2 ||rho - (P0 rho P0 + P1 rho P1)||^2 with P_i = Pi_i (x) 1_B.
double axis_dephasing_power(const DensityMatrix& rho, const Vec3& r) {
  const auto [p0, p1] = axis_projectors(r);
  const ComplexMatrix id_b = ComplexMatrix::identity(rho.dims().b);
  const ComplexMatrix e0 = tensor(p0, id_b);
  const ComplexMatrix e1 = tensor(p1, id_b);
  const ComplexMatrix dephased = e0 * rho.matrix() * e0 + e1 * rho.matrix() * e1;
  return 2.0 * hs_norm_sq(rho.matrix() - dephased);
}

void require_qubit_a(const DensityMatrix& rho, const char* op) {
  if (rho.dims().a != 2) {
    throw Error(ErrorKind::dimension_mismatch, std::string(op) + " needs a qubit on A");
  }
}

/// Screen the lattice with `objective` (minimized), then compass-refine the
/// winner in spherical coordinates.
template <typename F>
AxisSearch sphere_minimize(F&& objective, const AxisSearchOptions& options) {
  const auto axes = jittered_fibonacci_axes(std::max<std::size_t>(options.samples, 1), options.seed);
  const auto best = kernels::omp::argmin(axes.size(), [&](std::size_t i) { return objective(axes[i]); });
  const auto [theta, phi] = search::axis_to_spherical(axes[best.index]);
  auto refined = search::compass_minimize(
      [&](const std::vector<double>& x) { return objective(search::spherical_to_axis(x[0], x[1])); },
      {theta, phi}, options.compass);
  AxisSearch out;
  if (refined.value <= best.value) {
    out.value = refined.value;
    out.axis = search::spherical_to_axis(refined.x[0], refined.x[1]);
  } else {
    out.value = best.value;
    out.axis = axes[best.index];
  }
  return out;
}

/// Smooth surjection R^3 -> closed unit ball: u -> sin(|u|) u / |u|.
Vec3 ball_point(double u0, double u1, double u2) {
  const double n = std::sqrt(u0 * u0 + u1 * u1 + u2 * u2);
  const double scale = n < 1e-12 ? 1.0 : std::sin(n) / n;
  return {scale * u0, scale * u1, scale * u2};
}

ComplexMatrix qubit_state(const Vec3& s) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  for (std::size_t i = 0; i < 3; ++i) m += pauli(i) * Complex(s[i]);
  return m * Complex(0.5);
}

/// x = (theta, phi, p_angle, u0[3], u1[3])
ComplexMatrix cq_state(const std::vector<double>& x) {
  const Vec3 r = search::spherical_to_axis(x[0], x[1]);
  const double p = std::sin(x[2]) * std::sin(x[2]);
  const auto [p0, p1] = axis_projectors(r);
  const ComplexMatrix b0 = qubit_state(ball_point(x[3], x[4], x[5]));
  const ComplexMatrix b1 = qubit_state(ball_point(x[6], x[7], x[8]));
  return tensor(p0, b0) * Complex(p) + tensor(p1, b1) * Complex(1.0 - p);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::dimension_mismatch, "expm needs a square matrix");
  const std::size_t n = a.rows();
  const double norm = max_column_sum(a);
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const ComplexMatrix scaled = a * Complex(std::ldexp(1.0, -squarings));

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled * Complex(1.0 / k);
    result += term;
    if (max_column_sum(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

DensityMatrix unitary_expm_evolve(const DensityMatrix& rho, const LocalHamiltonian& h, double t) {
  if (h.dim_a() != rho.dims().a) {
    throw Error(ErrorKind::dimension_mismatch, "Hamiltonian does not act on subsystem A");
  }
  ComplexMatrix m = evolved_matrix(rho, h.matrix(), t);
  return DensityMatrix::from_matrix(rho.dims(), std::move(m));
}

TimeMax impact_power_grid(const DensityMatrix& rho, const LocalHamiltonian& h,
                          std::size_t grid_points) {
  if (h.dim_a() != rho.dims().a) {
    throw Error(ErrorKind::dimension_mismatch, "Hamiltonian does not act on subsystem A");
  }
  const auto& energies = h.energies();
  if (energies.size() < 2 || !h.nondegenerate()) {
    throw Error(ErrorKind::degenerate_hamiltonian,
                "time-grid oracle needs pairwise distinct energies");
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < energies.size(); ++i) {
    for (std::size_t j = i + 1; j < energies.size(); ++j) {
      min_gap = std::min(min_gap, std::abs(energies[i] - energies[j]));
    }
  }
  const ComplexMatrix hm = h.matrix();
  const double span = 2.0 * std::numbers::pi / min_gap;
  const std::size_t grid = std::max<std::size_t>(grid_points, 2);
  const double step = span / static_cast<double>(grid);
  const auto best = kernels::omp::argmax(grid, [&](std::size_t i) {
    return direct_impact(rho, hm, step * static_cast<double>(i + 1));
  });
  const double t0 = step * static_cast<double>(best.index + 1);
  const auto polished = search::golden_section_max(
      [&](double t) { return direct_impact(rho, hm, t); }, t0 - step, t0 + step, 1e-12);
  if (polished.value > best.value) return {polished.value, polished.x};
  return {best.value, t0};
}

std::vector<Vec3> jittered_fibonacci_axes(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(2, rng);
  // SU(2) -> SO(3): R_ij = (1/2) Tr[s_i U s_j U^dagger]
  Mat3 rotation{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      rotation[i][j] = 0.5 * trace_of_product(pauli(i), u * pauli(j) * u.adjoint()).real();
    }
  }
  return search::fibonacci_sphere(samples, rotation);
}

AxisSearch p_min_search(const DensityMatrix& rho, const AxisSearchOptions& options) {
  require_qubit_a(rho, "p_min_search");
  auto out = sphere_minimize([&](const Vec3& r) { return axis_dephasing_power(rho, r); }, options);
  out.value = std::max(out.value, 0.0);
  return out;
}

AxisSearch p_max_search(const DensityMatrix& rho, const AxisSearchOptions& options,
                        std::size_t grid_points) {
  require_qubit_a(rho, "p_max_search");
  const auto best =
      sphere_minimize([&](const Vec3& r) { return -axis_dephasing_power(rho, r); }, options);
  const auto [p0, p1] = axis_projectors(best.axis);
  const LocalHamiltonian h({0.0, 1.0}, {p0, p1});
  return {impact_power_grid(rho, h, grid_points).value, best.axis};
}

CqSearch discord_cq_search(const DensityMatrix& rho, const CqSearchOptions& options) {
  if (rho.dims() != Dims{2, 2}) {
    throw Error(ErrorKind::dimension_mismatch, "discord_cq_search needs a two-qubit state");
  }
  const auto objective = [&](const std::vector<double>& x) {
    return hs_norm_sq(rho.matrix() - cq_state(x));
  };
  const std::size_t samples = std::max<std::size_t>(options.samples, 1);
  const auto starts = kernels::omp::map(samples, [&](std::size_t i) {
    Rng rng(derive_seed(options.seed, i));
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    const Vec3 r = random_axis(rng);
    const auto [theta, phi] = search::axis_to_spherical(r);
    std::vector<double> x{theta, phi, 0.5 * angle(rng)};
    for (int k = 0; k < 6; ++k) x.push_back(coord(rng));
    return x;
  });
  const auto screened = kernels::omp::map(samples, [&](std::size_t i) { return objective(starts[i]); });
  std::vector<std::size_t> order(samples);
  for (std::size_t i = 0; i < samples; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return screened[i] < screened[j]; });

  const std::size_t refined = std::clamp<std::size_t>(options.refined, 1, samples);
  const auto results = kernels::omp::map(refined, [&](std::size_t k) {
    return search::compass_minimize(objective, starts[order[k]], options.compass);
  });
  const auto winner =
      kernels::serial::argmin(results.size(), [&](std::size_t k) { return results[k].value; });
  return {results[winner.index].value, cq_state(results[winner.index].x)};
}

}  // namespace impactpower::oracle
