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

#include "impactpower/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "impactpower/error.hpp"
#include "impactpower/kernels.hpp"
#include "impactpower/random.hpp"

namespace impactpower {

namespace {

constexpr double kEigenTieTol = 1e-10;

void require_qubit_a(const DensityMatrix& rho, const char* op) {
  if (rho.dims().a != 2) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(op) + " needs a qubit on A, got d_A = " + std::to_string(rho.dims().a));
  }
}

void require_two_qubits(const DensityMatrix& rho, const char* op) {
  if (rho.dims() != Dims{2, 2}) {
    throw Error(ErrorKind::dimension_mismatch, std::string(op) + " needs a two-qubit state");
  }
}

/// Lexicographically smallest unit vector in the span of the eigenvectors
/// whose eigenvalue lies within kEigenTieTol of eig.eigenvalues[target].
Vec3 lexicographic_axis(const MMatrix& m, std::size_t target) {
  Mat3 proj{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::abs(m.eigenvalues[k] - m.eigenvalues[target]) > kEigenTieTol) continue;
    const Vec3& v = m.eigenvectors[k];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) proj[i][j] += v[i] * v[j];
    }
  }
  // Minimizing <u, e_1> over unit u in the subspace gives u = -P e_1 / |P e_1|;
  // fall through to e_2, e_3 when P e_1 vanishes.
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const Vec3 w{proj[0][axis], proj[1][axis], proj[2][axis]};
    const double n = std::sqrt(norm_sq(w));
    if (n > 1e-12) return {-w[0] / n, -w[1] / n, -w[2] / n};
  }
  return m.eigenvectors[target];
}

/// Right-multiplies `v` by the Givens rotations encoded in `angles`: for each
/// pair p < q a real rotation followed by an imaginary one.
ComplexMatrix rotate_basis(ComplexMatrix v, const std::vector<double>& angles) {
  const std::size_t d = v.cols();
  std::size_t idx = 0;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) {
      const double alpha = angles[idx++];
      const double beta = angles[idx++];
      const double ca = std::cos(alpha), sa = std::sin(alpha);
      const double cb = std::cos(beta), sb = std::sin(beta);
      for (std::size_t i = 0; i < v.rows(); ++i) {
        const Complex vp = v(i, p), vq = v(i, q);
        v(i, p) = ca * vp + sa * vq;
        v(i, q) = -sa * vp + ca * vq;
      }
      for (std::size_t i = 0; i < v.rows(); ++i) {
        const Complex vp = v(i, p), vq = v(i, q);
        v(i, p) = cb * vp + Complex(0.0, sb) * vq;
        v(i, q) = Complex(0.0, sb) * vp + cb * vq;
      }
    }
  }
  return v;
}

/// ||rho - sum_i Pi_i rho Pi_i||^2 = Tr[rho^2] - sum_i Tr[rho Pi_i rho Pi_i].
double dephasing_distance(const DensityMatrix& rho, const ComplexMatrix& basis) {
  const std::size_t db = rho.dims().b;
  const ComplexMatrix id_b = ComplexMatrix::identity(db);
  double overlap = 0.0;
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    const auto v = basis.column(i);
    const ComplexMatrix r = rho.matrix() * tensor(ComplexMatrix::outer(v, v), id_b);
    overlap += trace_of_product(r, r).real();
  }
  return rho.purity() - overlap;
}

}  // namespace

MeasurementAxis::MeasurementAxis(const Vec3& r) : r_(r) {
  if (std::abs(std::sqrt(norm_sq(r)) - 1.0) > 1e-12) {
    throw Error(ErrorKind::out_of_range, "measurement axis is not a unit vector");
  }
}

MeasurementAxis MeasurementAxis::normalized(const Vec3& v) {
  const double n = std::sqrt(norm_sq(v));
  if (n < 1e-300) throw Error(ErrorKind::out_of_range, "measurement axis is zero");
  return MeasurementAxis({v[0] / n, v[1] / n, v[2] / n});
}

MMatrix m_matrix(const DensityMatrix& rho) {
  require_qubit_a(rho, "m_matrix");
  const ComplexMatrix id_b = ComplexMatrix::identity(rho.dims().b);
  std::array<ComplexMatrix, 3> rho_sigma;
  for (std::size_t i = 0; i < 3; ++i) rho_sigma[i] = rho.matrix() * tensor(pauli(i), id_b);

  MMatrix out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const Complex v = trace_of_product(rho_sigma[i], rho_sigma[j]);
      out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
      out.m[i][j] = v.real();
      out.m[j][i] = v.real();
    }
  }
  const auto eig = symmetric_eigendecompose(out.m);
  out.eigenvalues = eig.eigenvalues;
  out.eigenvectors = eig.eigenvectors;
  return out;
}

double axis_impact_power(const MMatrix& m, double purity, const MeasurementAxis& axis) {
  const Vec3& r = axis.r();
  double quad = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) quad += r[i] * m.m[i][j] * r[j];
  }
  return purity - quad;
}

PExtrema p_extrema(const DensityMatrix& rho) {
  const MMatrix m = m_matrix(rho);
  const double purity = rho.purity();
  PExtrema out;
  out.p_min = std::clamp(purity - m.eigenvalues[2], 0.0, 1.0);
  out.p_max = std::clamp(purity - m.eigenvalues[0], 0.0, 1.0);
  out.min_axis = lexicographic_axis(m, 2);
  out.max_axis = lexicographic_axis(m, 0);
  return out;
}

std::string_view to_string(DiscordMethod method) {
  return method == DiscordMethod::closed_form ? "closed-form" : "numeric";
}

MeasurementDiscord measurement_discord(const DensityMatrix& rho,
                                       const MeasurementSearchOptions& options) {
  const std::size_t da = rho.dims().a;
  if (da == 1) return {0.0, ComplexMatrix::identity(1)};
  const std::size_t starts = std::max<std::size_t>(options.starts, 1);

  const auto bases = kernels::omp::map(starts, [&](std::size_t i) {
    Rng rng(derive_seed(options.seed, i));
    return random_unitary(da, rng);
  });
  const auto screened = kernels::omp::map(
      starts, [&](std::size_t i) { return dephasing_distance(rho, bases[i]); });

  std::vector<std::size_t> order(starts);
  for (std::size_t i = 0; i < starts; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return screened[i] < screened[j]; });
  const std::size_t refined = std::clamp<std::size_t>(options.refined, 1, starts);
  const std::size_t params = da * (da - 1);

  const auto results = kernels::omp::map(refined, [&](std::size_t k) {
    const ComplexMatrix& start = bases[order[k]];
    auto objective = [&](const std::vector<double>& angles) {
      return dephasing_distance(rho, rotate_basis(start, angles));
    };
    auto best = search::compass_minimize(objective, std::vector<double>(params, 0.0),
                                         options.compass);
    return MeasurementDiscord{best.value, rotate_basis(start, best.x)};
  });

  const auto winner = kernels::serial::argmin(results.size(),
                                              [&](std::size_t k) { return results[k].value; });
  MeasurementDiscord out = results[winner.index];
  out.value = std::max(out.value, 0.0);
  return out;
}

Discord geometric_discord(const DensityMatrix& rho, const MeasurementSearchOptions& options) {
  if (rho.dims().a == 2) {
    return {0.5 * p_extrema(rho).p_min, DiscordMethod::closed_form};
  }
  return {measurement_discord(rho, options).value, DiscordMethod::numeric};
}

KMatrix k_matrix(const BlochTwoQubit& b) {
  KMatrix out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      double tt = 0.0;
      for (std::size_t l = 0; l < 3; ++l) tt += b.t[i][l] * b.t[j][l];
      out.k[i][j] = b.x[i] * b.x[j] + tt;
    }
  }
  out.k_max = symmetric_eigendecompose(out.k).eigenvalues[2];
  return out;
}

double k_matrix_discord(const DensityMatrix& rho) {
  require_two_qubits(rho, "k_matrix_discord");
  const BlochTwoQubit b = bloch_decompose(rho);
  const KMatrix k = k_matrix(b);
  return std::max(0.0, 0.25 * (norm_sq(b.x) + frobenius_sq(b.t) - k.k_max));
}

BoundCheck purity_bound_check(const DensityMatrix& rho) {
  require_two_qubits(rho, "purity_bound_check");
  BoundCheck out;
  out.lhs = p_extrema(rho).p_min;
  out.rhs = 4.0 / 3.0 * rho.purity() - 1.0 / 3.0;
  out.saturates = std::abs(out.lhs - out.rhs) <= kSaturationTol;
  return out;
}

GeneralDimBound general_dim_bound_check(const DensityMatrix& rho, const LocalHamiltonian& h,
                                        double tol, const MeasurementSearchOptions& options) {
  if (!h.fully_nondegenerate()) {
    throw Error(ErrorKind::degenerate_hamiltonian,
                "the general-dimension bound needs d_A distinct energies");
  }
  if (h.dim_a() != rho.dims().a) {
    throw Error(ErrorKind::dimension_mismatch, "Hamiltonian does not act on subsystem A");
  }
  const double da = static_cast<double>(rho.dims().a);
  const ImpactPower power = impact_power(rho, h);
  const Discord discord = geometric_discord(rho, options);

  GeneralDimBound out;
  out.power = power.value;
  out.power_method = power.method;
  out.discord = discord.value;
  out.discord_method = discord.method;
  out.bound = 4.0 * discord.value / (da * (da - 1.0));
  out.margin = out.power - out.bound;
  out.holds = out.margin >= -tol;
  return out;
}

double trace_p_min_sampled(const DensityMatrix& rho, std::size_t samples) {
  require_qubit_a(rho, "trace_p_min_sampled");
  const Mat3 identity{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  const auto axes = search::fibonacci_sphere(std::max<std::size_t>(samples, 1), identity);
  return kernels::omp::argmin(axes.size(), [&](std::size_t i) {
           return trace_impact_power(rho, LocalHamiltonian::qubit(axes[i])).value;
         }).value;
}

CorrelationReport report(const DensityMatrix& rho, const MeasurementSearchOptions& options) {
  CorrelationReport out;
  out.dims = rho.dims();
  out.purity = rho.purity();
  if (rho.dims().a == 2) {
    const PExtrema ext = p_extrema(rho);
    out.p_min = ext.p_min;
    out.p_max = ext.p_max;
    out.discord = 0.5 * ext.p_min;
    out.method = DiscordMethod::closed_form;
    if (rho.dims().b == 2) {
      out.bound_rhs = 4.0 / 3.0 * out.purity - 1.0 / 3.0;
      out.saturates_bound = std::abs(ext.p_min - *out.bound_rhs) <= kSaturationTol;
    }
  } else {
    out.discord = measurement_discord(rho, options).value;
    out.method = DiscordMethod::numeric;
  }
  return out;
}

}  // namespace impactpower
