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

#include "helpers.hpp"
#include "impactpower/correlations.hpp"
#include "impactpower/dynamics.hpp"
#include "impactpower/error.hpp"
#include "impactpower/random.hpp"
#include "impactpower/states.hpp"

using namespace impactpower;

namespace {

DensityMatrix bell() { return from_pure(max_entangled(2), {2, 2}); }

DensityMatrix product00() {
  const ComplexVector ket{1, 0, 0, 0};
  return from_pure(ket, {2, 2});
}

void check_m(const DensityMatrix& rho, const Mat3& expected) {
  const auto m = m_matrix(rho);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(m.m[i][j] - expected[i][j]) < 1e-14);
  }
}

}  // namespace

TEST_CASE("measurement axes must be unit vectors") {
  CHECK_NOTHROW(MeasurementAxis({0, 0, 1}));
  CHECK_THROWS_AS(MeasurementAxis({0, 0, 1.1}), Error);
  CHECK_THROWS_AS(MeasurementAxis::normalized({0, 0, 0}), Error);
  CHECK(MeasurementAxis::normalized({0, 3, 4}).r()[2] == doctest::Approx(0.8));
}

TEST_CASE("M matrix examples") {
  check_m(werner(0.5), {{{0.25, 0, 0}, {0, 0.25, 0}, {0, 0, 0.25}}});
  check_m(product00(), {{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}});
  check_m(bell(), {});
  CHECK_THROWS_AS(m_matrix(random_state({3, 2}, 6, 0)), Error);
}

TEST_CASE("M matrix invariants on random states") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto rho = random_state({2, 2 + s % 3}, 1 + s % 6, s);
    const auto m = m_matrix(rho);
    CHECK(m.max_imag <= 1e-10);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(m.m[i][j] - m.m[j][i]) < 1e-12);
    }
    CHECK(m.eigenvalues[2] <= rho.purity() + 1e-10);
    CHECK(m.eigenvalues[0] >= -1e-10);
  }
}

TEST_CASE("axis impact power equals the dephasing distance") {
  Rng rng(3);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto rho = random_state({2, 3}, 6, s);
    const auto r = random_axis(rng);
    ComplexMatrix dephased(6, 6);
    for (double sign : {1.0, -1.0}) {
      Vec3 v = r;
      for (double& c : v) c *= sign;
      const auto pi = tensor(0.5 * (ComplexMatrix::identity(2) + bloch_operator(v)), ComplexMatrix::identity(3));
      dephased += pi * rho.matrix() * pi;
    }
    const double direct = 2.0 * hs_norm_sq(rho.matrix() - dephased);
    CHECK(std::abs(axis_impact_power(m_matrix(rho), rho.purity(), MeasurementAxis(r)) - direct) < 1e-10);
  }
}

TEST_CASE("p extrema examples") {
  const auto p = p_extrema(product00());
  CHECK(std::abs(p.p_min) < 1e-15);
  CHECK(p.p_max == doctest::Approx(1.0));
  const auto b = p_extrema(bell());
  CHECK(b.p_min == doctest::Approx(1.0));
  CHECK(b.p_max == doctest::Approx(1.0));
  CHECK(p_extrema(werner(1.0)).p_min == doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto rho = random_state({2, 4}, 8, s);
    const auto e = p_extrema(rho);
    CHECK(e.p_min >= 0.0);
    CHECK(e.p_min <= e.p_max);
    CHECK(e.p_max <= 1.0 + 1e-10);
    CHECK(axis_impact_power(m_matrix(rho), rho.purity(), MeasurementAxis(e.min_axis)) == doctest::Approx(e.p_min));
    CHECK(axis_impact_power(m_matrix(rho), rho.purity(), MeasurementAxis(e.max_axis)) == doctest::Approx(e.p_max));
    CHECK(geometric_discord(rho).value == doctest::Approx(e.p_min / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("geometric discord") {
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const auto spec = random_classical_quantum_spec({2, 3}, rng);
    CHECK(geometric_discord(classical_quantum(spec)).value <= 1e-9);
  }
  for (int i = 0; i <= 20; ++i) {
    const double x = -1.0 + 0.1 * i;
    const auto d = geometric_discord(werner(x));
    CHECK(d.method == DiscordMethod::closed_form);
    CHECK(std::abs(d.value - (2 * x - 1) * (2 * x - 1) / 18.0) < 1e-10);
  }
  CHECK(geometric_discord(bell()).value == doctest::Approx(0.5));
}

TEST_CASE("numeric discord for a qutrit measured party") {
  Rng rng(23);
  for (int k = 0; k < 5; ++k) {
    const auto spec = random_classical_quantum_spec({3, 2}, rng);
    const auto d = geometric_discord(classical_quantum(spec));
    CHECK(d.method == DiscordMethod::numeric);
    CHECK(d.value <= 1e-9);
  }
  // A two-qubit state embedded in a qutrit A keeps its discord.
  const auto rho = random_state({2, 2}, 4, 5);
  ComplexMatrix embedded(6, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) embedded(i, j) = rho.matrix()(i, j);
  }
  const auto d3 = geometric_discord(DensityMatrix::from_matrix({3, 2}, embedded));
  CHECK(d3.value == doctest::Approx(geometric_discord(rho).value).epsilon(1e-8));
}

TEST_CASE("K matrix route") {
  CHECK(std::abs(k_matrix_discord(werner(0.5))) < 1e-15);
  CHECK(k_matrix_discord(bell()) == doctest::Approx(0.5));
  CHECK(k_matrix_discord(werner(0.0)) == doctest::Approx(1.0 / 18.0));
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto rho = random_state({2, 2}, 1 + s % 4, s);
    const auto b = bloch_decompose(rho);
    const auto k = k_matrix(b);
    CHECK(3.0 * k.k_max >= norm_sq(b.x) + frobenius_sq(b.t) - 1e-10);
    CHECK(std::abs(k_matrix_discord(rho) - geometric_discord(rho).value) < 1e-12);
  }
}

TEST_CASE("purity bound") {
  for (int i = 0; i <= 20; ++i) CHECK(purity_bound_check(werner(-1.0 + 0.1 * i)).saturates);
  const auto product = purity_bound_check(product00());
  CHECK(std::abs(product.lhs) < 1e-15);
  CHECK(product.rhs == doctest::Approx(1.0));
  CHECK_FALSE(product.saturates);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto c = purity_bound_check(random_state({2, 2}, 4, s));
    CHECK(c.lhs <= c.rhs + 1e-9);
  }
}

TEST_CASE("general dimension bound") {
  Rng rng(31);
  const auto spec = random_classical_quantum_spec({3, 2}, rng);
  std::vector<ComplexMatrix> projectors;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto v = spec.basis.column(k);
    projectors.push_back(ComplexMatrix::outer(v, v));
  }
  const LocalHamiltonian h({0.0, 0.4, 1.0}, projectors);
  const auto cq = general_dim_bound_check(classical_quantum(spec), h);
  CHECK(std::abs(cq.power) < 1e-10);
  CHECK(std::abs(cq.bound) < 1e-8);
  CHECK(cq.holds);

  const auto rho = random_state({2, 2}, 4, 3);
  const auto q = general_dim_bound_check(rho, LocalHamiltonian::qubit({0, 1, 0}));
  CHECK(q.bound == doctest::Approx(2.0 * geometric_discord(rho).value));
  CHECK(q.holds);

  const std::vector<double> degenerate{0.0, 0.0, 1.0};
  CHECK_THROWS_AS(general_dim_bound_check(random_state({3, 2}, 6, 1), LocalHamiltonian::diagonal(degenerate)),
                  Error);
}

TEST_CASE("correlation reports") {
  const auto w = report(werner(1.0));
  CHECK(w.purity == doctest::Approx(1.0 / 3.0));
  CHECK(*w.p_min == doctest::Approx(1.0 / 9.0));
  CHECK(w.discord == doctest::Approx(1.0 / 18.0));
  CHECK(*w.saturates_bound);

  const auto mixed = report(werner(0.5));
  CHECK(mixed.purity == doctest::Approx(0.25));
  CHECK(std::abs(*mixed.p_min) < 1e-15);
  CHECK(std::abs(*mixed.p_max) < 1e-15);
  CHECK(std::abs(mixed.discord) < 1e-15);

  const auto wide = report(random_state({2, 4}, 8, 2));
  CHECK(std::abs(*wide.p_min - 2.0 * wide.discord) < 1e-12);
  CHECK_FALSE(wide.bound_rhs.has_value());

  const auto qutrit = report(random_state({3, 2}, 6, 2));
  CHECK_FALSE(qutrit.p_min.has_value());
  CHECK(qutrit.method == DiscordMethod::numeric);
}

TEST_CASE("sampled trace-norm p_min") {
  CHECK(trace_p_min_sampled(bell(), 200) == doctest::Approx(2.0));
  CHECK(trace_p_min_sampled(random_state({2, 2}, 4, 8), 200) > 0.0);
}
