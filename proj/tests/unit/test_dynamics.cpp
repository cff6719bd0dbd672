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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "impactpower/dynamics.hpp"
#include "impactpower/error.hpp"
#include "impactpower/oracle.hpp"
#include "impactpower/random.hpp"
#include "impactpower/states.hpp"

using namespace impactpower;
using testing::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix bell() { return from_pure(max_entangled(2), {2, 2}); }

LocalHamiltonian z_hamiltonian() {
  const std::vector<double> e{0.0, 1.0};
  return LocalHamiltonian::diagonal(e);
}

}  // namespace

TEST_CASE("Hamiltonian construction and validation") {
  const auto h = LocalHamiltonian::qubit({0, 0, 1}, 2.0);
  CHECK(max_abs_diff(h.matrix(), ComplexMatrix{{0, 0}, {0, 2}}) < 1e-15);
  CHECK(h.nondegenerate());
  CHECK(h.fully_nondegenerate());

  Rng rng(4);
  const auto u = random_unitary(3, rng);
  const std::vector<double> e{-0.5, 0.25, 1.0};
  const auto target = u * ComplexMatrix::diagonal(e) * u.adjoint();
  const auto spectral = LocalHamiltonian::from_matrix(target);
  CHECK(max_abs_diff(spectral.matrix(), target) < 1e-12);
  for (std::size_t i = 0; i < spectral.projectors().size(); ++i) {
    for (std::size_t j = 0; j < spectral.projectors().size(); ++j) {
      const auto prod = spectral.projectors()[i] * spectral.projectors()[j];
      CHECK(max_abs_diff(prod, i == j ? spectral.projectors()[i] : ComplexMatrix(3, 3)) < 1e-10);
    }
  }

  const std::vector<double> flat{1.0, 1.0};
  CHECK_FALSE(LocalHamiltonian::diagonal(flat).nondegenerate());
  const std::vector<double> partly{0.0, 0.0, 1.0};
  const auto h3 = LocalHamiltonian::diagonal(partly);
  CHECK_FALSE(h3.nondegenerate());
  CHECK(h3.levels().size() == 2);
  const ComplexMatrix p01{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  const ComplexMatrix p2{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  const LocalHamiltonian two_level({0.0, 1.0}, {p01, p2});
  CHECK(two_level.nondegenerate());
  CHECK_FALSE(two_level.fully_nondegenerate());

  const ComplexMatrix p0{{1, 0}, {0, 0}};
  const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
  CHECK_THROWS_AS(LocalHamiltonian({0.0, 1.0}, {p0, plus}), Error);
  CHECK_THROWS_AS(LocalHamiltonian({0.0}, {p0}), Error);
}

TEST_CASE("evolution endpoints") {
  const auto rho = random_state({2, 3}, 6, 1);
  const auto h = z_hamiltonian();
  CHECK(max_abs_diff(evolve(rho, h, 0.0).matrix(), rho.matrix()) < 1e-15);
  const std::vector<double> flat{0.7, 0.7};
  CHECK(max_abs_diff(evolve(rho, LocalHamiltonian::diagonal(flat), 3.1).matrix(), rho.matrix()) < 1e-14);

  const auto phi = bell();
  const auto moved = evolve(phi, h, kPi);
  CHECK(std::abs(trace_of_product(moved.matrix(), phi.matrix())) < 1e-10);
}

TEST_CASE("impact values") {
  const auto phi = bell();
  const auto h = z_hamiltonian();
  CHECK(impact(phi, h, 0.0) == 0.0);
  CHECK(impact(phi, h, kPi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_impact(phi, h, 0.0) == doctest::Approx(0.0));
  CHECK(trace_impact(phi, h, kPi) == doctest::Approx(2.0).epsilon(1e-12));

  Rng rng(6);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto rho = random_state({3, 2}, 6, s);
    const auto hq = random_nondegenerate_hamiltonian(3, rng);
    const double t = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
    const auto c = impact_coefficients(rho, hq);
    CHECK(std::abs(impact(rho, hq, t) - c.profile(t)) < 1e-10);
    CHECK(trace_impact(rho, hq, t) >= impact(rho, hq, t) - 1e-10);
  }
}

TEST_CASE("impact coefficients") {
  const ComplexVector ket00{1, 0, 0, 0};
  const auto product = impact_coefficients(from_pure(ket00, {2, 2}), z_hamiltonian());
  CHECK(std::abs(product.a) < 1e-15);
  CHECK(std::abs(product.b_at(1, 0)) < 1e-15);

  const auto bell_c = impact_coefficients(bell(), z_hamiltonian());
  CHECK(bell_c.a == doctest::Approx(0.5));
  CHECK(bell_c.b_at(1, 0) == doctest::Approx(0.5));

  Rng rng(10);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto c = impact_coefficients(random_state({3, 3}, 9, s), random_nondegenerate_hamiltonian(3, rng));
    CHECK(std::abs(c.a - c.sum_b()) < 1e-10);
    for (std::size_t l = 0; l < c.level_count(); ++l) {
      for (std::size_t k = 0; k < l; ++k) CHECK(c.b_at(l, k) >= -1e-12);
    }
  }
}

TEST_CASE("impact power") {
  const std::vector<double> flat{0.3, 0.3};
  const auto trivial = impact_power(bell(), LocalHamiltonian::diagonal(flat));
  CHECK(trivial.value == 0.0);
  CHECK(trivial.method == PowerMethod::trivial);

  Rng rng(12);
  for (int k = 0; k < 20; ++k) {
    const auto p = impact_power(bell(), LocalHamiltonian::qubit(random_axis(rng), 0.3 + k * 0.1));
    CHECK(p.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.method == PowerMethod::closed_form);
  }

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto rho = random_state({3, 2}, 6, s);
    const auto h = random_nondegenerate_hamiltonian(3, rng);
    const auto p = impact_power(rho, h);
    const auto c = impact_coefficients(rho, h);
    CHECK(p.method == PowerMethod::numeric_lower_bound);
    CHECK(p.value >= 2.0 * c.max_b() - 1e-8);
    CHECK(p.value <= p.upper_bound + 1e-12);
    CHECK(impact(rho, h, p.t_max) == doctest::Approx(p.value).epsilon(1e-10));
  }
}

TEST_CASE("commensurate qutrit profile reaches its analytic maximum") {
  const std::vector<double> e{0.0, 1.0, 2.0};
  const auto h = LocalHamiltonian::diagonal(e);
  bool saw_interior = false;
  bool saw_boundary = false;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto rho = random_state({3, 2}, 1 + s % 6, s);
    const auto c = impact_coefficients(rho, h);
    const double b1 = c.b_at(1, 0) + c.b_at(2, 1);
    const double b2 = c.b_at(2, 0);
    const bool interior = b1 <= 4.0 * b2;
    (interior ? saw_interior : saw_boundary) = true;
    const double analytic = interior ? b1 + 2.0 * b2 + b1 * b1 / (8.0 * b2) : 2.0 * b1;
    CHECK(std::abs(impact_power(rho, h).value - analytic) < 1e-10);
  }
  CHECK(saw_interior);
  CHECK(saw_boundary);
}

TEST_CASE("trace impact power") {
  const auto p = trace_impact_power(bell(), z_hamiltonian());
  CHECK(p.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.t_max == doctest::Approx(kPi));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto rho = random_state({2, 2}, 4, s);
    const auto tp = trace_impact_power(rho, LocalHamiltonian::qubit({0.6, 0, 0.8}, 1.5));
    for (int k = 0; k <= 200; ++k) {
      const double t = 2.0 * kPi / 1.5 * k / 200.0;
      CHECK(trace_impact(rho, LocalHamiltonian::qubit({0.6, 0, 0.8}, 1.5), t) <= tp.value + 1e-12);
    }
  }
}
