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

#include "impactpower/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "impactpower/error.hpp"
#include "impactpower/kernels.hpp"
#include "impactpower/search.hpp"

namespace impactpower {

namespace {

constexpr double kProjectorTol = 1e-10;

void require_compatible(const DensityMatrix& rho, const LocalHamiltonian& h) {
  if (rho.dims().a != h.dim_a()) {
    throw Error(ErrorKind::dimension_mismatch,
                "Hamiltonian acts on dimension " + std::to_string(h.dim_a()) +
                    " but subsystem A has dimension " + std::to_string(rho.dims().a));
  }
}

ComplexMatrix embed_a(const ComplexMatrix& op_a, std::size_t db) {
  return tensor(op_a, ComplexMatrix::identity(db));
}

ComplexMatrix local_unitary(const LocalHamiltonian& h, double t) {
  ComplexMatrix u(h.dim_a(), h.dim_a());
  for (std::size_t i = 0; i < h.energies().size(); ++i) {
    u += h.projectors()[i] * std::exp(Complex(0.0, -h.energies()[i] * t));
  }
  return u;
}

}  // namespace

LocalHamiltonian::LocalHamiltonian(std::vector<double> energies,
                                   std::vector<ComplexMatrix> projectors)
    : energies_(std::move(energies)), projectors_(std::move(projectors)) {
  if (energies_.empty() || energies_.size() != projectors_.size()) {
    throw Error(ErrorKind::dimension_mismatch, "need one projector per energy");
  }
  dim_a_ = projectors_.front().rows();
  ComplexMatrix completeness(dim_a_, dim_a_);
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const auto& p = projectors_[i];
    if (!p.is_square() || p.rows() != dim_a_) {
      throw Error(ErrorKind::dimension_mismatch, "projectors must all be square on A");
    }
    if (!std::isfinite(energies_[i])) {
      throw Error(ErrorKind::out_of_range, "energies must be finite");
    }
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
      ComplexMatrix expected = i == j ? p : ComplexMatrix(dim_a_, dim_a_);
      const double err = std::sqrt(hs_norm_sq(p * projectors_[j] - expected));
      if (err > kProjectorTol) {
        throw Error(ErrorKind::out_of_range,
                    "projectors are not orthogonal idempotents (pair " + std::to_string(i) +
                        ", " + std::to_string(j) + ")");
      }
    }
    completeness += p;
  }
  if (std::sqrt(hs_norm_sq(completeness - ComplexMatrix::identity(dim_a_))) > kProjectorTol) {
    throw Error(ErrorKind::out_of_range, "projectors do not resolve the identity on A");
  }
}

LocalHamiltonian LocalHamiltonian::from_matrix(const ComplexMatrix& h) {
  const auto eig = hermitian_eigendecompose(h);
  std::vector<ComplexMatrix> projectors;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const auto v = eig.eigenvectors.column(k);
    projectors.push_back(ComplexMatrix::outer(v, v));
  }
  return LocalHamiltonian(eig.eigenvalues, std::move(projectors));
}

LocalHamiltonian LocalHamiltonian::diagonal(std::span<const double> energies) {
  std::vector<ComplexMatrix> projectors;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    ComplexMatrix p(energies.size(), energies.size());
    p(i, i) = 1.0;
    projectors.push_back(std::move(p));
  }
  return LocalHamiltonian({energies.begin(), energies.end()}, std::move(projectors));
}

LocalHamiltonian LocalHamiltonian::qubit(const Vec3& axis, double gap) {
  const double n = std::sqrt(norm_sq(axis));
  if (n < 1e-12) throw Error(ErrorKind::out_of_range, "qubit Hamiltonian axis is zero");
  const Vec3 r{axis[0] / n, axis[1] / n, axis[2] / n};
  const ComplexMatrix rs = bloch_operator(r);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return LocalHamiltonian({0.0, gap}, {(id + rs) * Complex(0.5), (id - rs) * Complex(0.5)});
}

double LocalHamiltonian::gap_tol() const {
  double emax = 0.0;
  for (double e : energies_) emax = std::max(emax, std::abs(e));
  return kRelativeGapTol * emax;
}

bool LocalHamiltonian::nondegenerate() const {
  const double tol = gap_tol();
  for (std::size_t i = 0; i < energies_.size(); ++i) {
    for (std::size_t j = i + 1; j < energies_.size(); ++j) {
      if (!(std::abs(energies_[i] - energies_[j]) > tol)) return false;
    }
  }
  return true;
}

bool LocalHamiltonian::fully_nondegenerate() const {
  return nondegenerate() && energies_.size() == dim_a_;
}

std::vector<EnergyLevel> LocalHamiltonian::levels() const {
  std::vector<std::size_t> order(energies_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return energies_[i] < energies_[j]; });
  const double tol = gap_tol();
  std::vector<EnergyLevel> out;
  for (std::size_t idx : order) {
    if (!out.empty() && std::abs(energies_[idx] - out.back().energy) <= tol) {
      out.back().projector += projectors_[idx];
    } else {
      out.push_back({energies_[idx], projectors_[idx]});
    }
  }
  return out;
}

ComplexMatrix LocalHamiltonian::matrix() const {
  ComplexMatrix h(dim_a_, dim_a_);
  for (std::size_t i = 0; i < energies_.size(); ++i) h += projectors_[i] * Complex(energies_[i]);
  return h;
}

LocalHamiltonian LocalHamiltonian::conjugated(const ComplexMatrix& u) const {
  std::vector<ComplexMatrix> projectors;
  const ComplexMatrix ud = u.adjoint();
  for (const auto& p : projectors_) projectors.push_back(u * p * ud);
  return LocalHamiltonian(energies_, std::move(projectors));
}

LocalHamiltonian LocalHamiltonian::rescaled(double scale, double shift) const {
  std::vector<double> energies = energies_;
  for (auto& e : energies) e = scale * e + shift;
  return LocalHamiltonian(std::move(energies), projectors_);
}

LocalHamiltonian random_nondegenerate_hamiltonian(std::size_t dim_a, Rng& rng, double min_gap) {
  if (dim_a < 2 || min_gap * static_cast<double>(dim_a - 1) > 2.0) {
    throw Error(ErrorKind::out_of_range, "cannot place the requested levels in [-1, 1]");
  }
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::vector<double> energies(dim_a);
  bool spaced = false;
  while (!spaced) {
    for (auto& e : energies) e = uniform(rng);
    std::sort(energies.begin(), energies.end());
    spaced = true;
    for (std::size_t i = 1; i < dim_a; ++i) spaced = spaced && energies[i] - energies[i - 1] >= min_gap;
  }
  const ComplexMatrix v = random_unitary(dim_a, rng);
  std::vector<ComplexMatrix> projectors;
  for (std::size_t k = 0; k < dim_a; ++k) {
    const auto col = v.column(k);
    projectors.push_back(ComplexMatrix::outer(col, col));
  }
  return LocalHamiltonian(std::move(energies), std::move(projectors));
}

double ImpactCoefficients::sum_b() const { return std::accumulate(b.begin(), b.end(), 0.0); }

double ImpactCoefficients::max_b() const {
  return b.empty() ? 0.0 : *std::max_element(b.begin(), b.end());
}

double ImpactCoefficients::min_gap() const {
  double g = 0.0;
  for (std::size_t i = 1; i < level_energies.size(); ++i) {
    const double d = level_energies[i] - level_energies[i - 1];
    g = i == 1 ? d : std::min(g, d);
  }
  return g;
}

double ImpactCoefficients::profile(double t) const {
  const std::size_t n = level_count();
  double value = a;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < l; ++k) {
      value -= b[l * n + k] * std::cos((level_energies[l] - level_energies[k]) * t);
    }
  }
  return value;
}

std::string_view to_string(PowerMethod method) {
  switch (method) {
    case PowerMethod::trivial: return "trivial";
    case PowerMethod::closed_form: return "closed-form";
    case PowerMethod::numeric_lower_bound: return "numeric";
  }
  return "unknown";
}

DensityMatrix evolve(const DensityMatrix& rho, const LocalHamiltonian& h, double t) {
  require_compatible(rho, h);
  return conjugate(rho, embed_a(local_unitary(h, t), rho.dims().b));
}

double impact(const DensityMatrix& rho, const LocalHamiltonian& h, double t) {
  const DensityMatrix evolved = evolve(rho, h, t);
  return 0.5 * hs_norm_sq(evolved.matrix() - rho.matrix());
}

ImpactCoefficients impact_coefficients(const DensityMatrix& rho, const LocalHamiltonian& h) {
  require_compatible(rho, h);
  const auto levels = h.levels();
  const std::size_t n = levels.size();
  const auto& m = rho.matrix();

  // rho (Pi_l (x) 1); then Tr[rho Pi_l rho Pi_k] = Tr[(rho Pi_l)(rho Pi_k)].
  std::vector<ComplexMatrix> rho_pi;
  rho_pi.reserve(n);
  for (const auto& level : levels) rho_pi.push_back(m * embed_a(level.projector, rho.dims().b));

  ImpactCoefficients c;
  c.level_energies.reserve(n);
  for (const auto& level : levels) c.level_energies.push_back(level.energy);
  c.b.assign(n * n, 0.0);
  double dephased_overlap = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    dephased_overlap += trace_of_product(rho_pi[l], rho_pi[l]).real();
    for (std::size_t k = 0; k < l; ++k) {
      c.b[l * n + k] = 2.0 * trace_of_product(rho_pi[l], rho_pi[k]).real();
    }
  }
  c.a = rho.purity() - dephased_overlap;
  return c;
}

ImpactPower maximize_profile(const ImpactCoefficients& c, const TimeSearchOptions& options) {
  ImpactPower out;
  out.upper_bound = 2.0 * c.a;
  const std::size_t n = c.level_count();
  if (n < 2) return out;

  if (n == 2) {
    // a = b, so the profile a - b cos(dE t) peaks at 2a when dE t = pi.
    out.method = PowerMethod::closed_form;
    out.value = 2.0 * c.a;
    out.t_max = std::numbers::pi / (c.level_energies[1] - c.level_energies[0]);
    return out;
  }

  out.method = PowerMethod::numeric_lower_bound;
  const double period = 2.0 * std::numbers::pi / c.min_gap();
  const std::size_t grid = std::max<std::size_t>(options.grid_points, 2);
  const double step = period / static_cast<double>(grid);

  // Candidates: the uniform grid on (0, period] followed by the half periods
  // pi / dE_lk, where each single term of the profile peaks.
  std::vector<double> half_periods;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < l; ++k) {
      half_periods.push_back(std::numbers::pi / (c.level_energies[l] - c.level_energies[k]));
    }
  }
  auto candidate_time = [&](std::size_t i) {
    return i < grid ? step * static_cast<double>(i + 1) : half_periods[i - grid];
  };
  const auto best = kernels::omp::argmax(grid + half_periods.size(),
                                         [&](std::size_t i) { return c.profile(candidate_time(i)); });
  const double t0 = candidate_time(best.index);
  const auto polished = search::golden_section_max([&](double t) { return c.profile(t); },
                                                   t0 - step, t0 + step, options.t_tol);
  if (polished.value > best.value) {
    out.t_max = polished.x;
    out.value = polished.value;
  } else {
    out.t_max = t0;
    out.value = best.value;
  }
  return out;
}

ImpactPower impact_power(const DensityMatrix& rho, const LocalHamiltonian& h,
                         const TimeSearchOptions& options) {
  return maximize_profile(impact_coefficients(rho, h), options);
}

double trace_impact(const DensityMatrix& rho, const LocalHamiltonian& h, double t) {
  const DensityMatrix evolved = evolve(rho, h, t);
  const double tn = trace_norm(evolved.matrix() - rho.matrix());
  return 0.5 * tn * tn;
}

ImpactPower trace_impact_power(const DensityMatrix& rho, const LocalHamiltonian& h,
                               std::size_t grid_points) {
  require_compatible(rho, h);
  const auto levels = h.levels();
  ImpactPower out;
  // Two states are at most 2 apart in trace norm.
  out.upper_bound = 2.0;
  if (levels.size() < 2) return out;

  if (levels.size() == 2) {
    out.method = PowerMethod::closed_form;
    out.t_max = std::numbers::pi / (levels[1].energy - levels[0].energy);
    out.value = trace_impact(rho, h, out.t_max);
    return out;
  }

  out.method = PowerMethod::numeric_lower_bound;
  double min_gap = levels[1].energy - levels[0].energy;
  std::vector<double> half_periods;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (l > 0) min_gap = std::min(min_gap, levels[l].energy - levels[l - 1].energy);
    for (std::size_t k = 0; k < l; ++k) {
      half_periods.push_back(std::numbers::pi / (levels[l].energy - levels[k].energy));
    }
  }
  const double period = 2.0 * std::numbers::pi / min_gap;
  const std::size_t grid = std::max<std::size_t>(grid_points, 2);
  const double step = period / static_cast<double>(grid);
  auto candidate_time = [&](std::size_t i) {
    return i < grid ? step * static_cast<double>(i + 1) : half_periods[i - grid];
  };
  const auto best = kernels::omp::argmax(
      grid + half_periods.size(), [&](std::size_t i) { return trace_impact(rho, h, candidate_time(i)); });
  const double t0 = candidate_time(best.index);
  const auto polished = search::golden_section_max(
      [&](double t) { return trace_impact(rho, h, t); }, t0 - step, t0 + step, 1e-10);
  out.t_max = polished.value > best.value ? polished.x : t0;
  out.value = std::max(polished.value, best.value);
  return out;
}

}  // namespace impactpower
