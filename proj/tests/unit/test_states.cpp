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
#include <functional>

#include "helpers.hpp"
#include "impactpower/error.hpp"
#include "impactpower/random.hpp"
#include "impactpower/states.hpp"

using namespace impactpower;
using testing::max_abs_diff;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no Error thrown");
  return ErrorKind::parse_error;
}

double min_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigendecompose(rho.matrix()).eigenvalues.front();
}

const double kS = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("validation names the violated invariant") {
  CHECK(kind_of([] { DensityMatrix::from_matrix({2, 2}, ComplexMatrix(3, 3)); }) ==
        ErrorKind::dimension_mismatch);
  CHECK(kind_of([] { DensityMatrix::from_matrix({1, 2}, ComplexMatrix{{0.5, 1}, {0, 0.5}}); }) ==
        ErrorKind::not_hermitian);
  CHECK(kind_of([] { DensityMatrix::from_matrix({1, 2}, ComplexMatrix{{1.5, 0}, {0, -0.5}}); }) ==
        ErrorKind::not_positive);
  try {
    DensityMatrix::from_matrix({2, 2}, 0.275 * ComplexMatrix::identity(4));
    FAIL("expected InvalidTrace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_trace);
    CHECK(std::string(e.what()).find("trace invariant") != std::string::npos);
  }
}

TEST_CASE("tiny negative eigenvalues are clamped") {
  const auto rho = DensityMatrix::from_matrix({1, 2}, ComplexMatrix{{1.0 + 5e-10, 0}, {0, -5e-10}});
  CHECK(min_eigenvalue(rho) >= 0.0);
  CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-15);
}

TEST_CASE("pure states") {
  const ComplexVector ket00{1, 0, 0, 0};
  const auto rho00 = from_pure(ket00, {2, 2});
  CHECK(max_abs_diff(rho00.matrix(), ComplexMatrix::outer(ket00, ket00)) == 0.0);

  const auto phi = from_pure(max_entangled(2), {2, 2});
  CHECK(phi.purity() == doctest::Approx(1.0));
  CHECK(max_abs_diff(phi.reduced_a(), 0.5 * ComplexMatrix::identity(2)) < 1e-15);
  CHECK(max_abs_diff(phi.reduced_b(), 0.5 * ComplexMatrix::identity(2)) < 1e-15);

  Rng rng(1);
  const auto v = random_unit_vector(6, rng);
  const auto eig = hermitian_eigendecompose(from_pure(v, {2, 3}).matrix()).eigenvalues;
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(eig[i]) < 1e-10);
  CHECK(eig[5] == doctest::Approx(1.0).epsilon(1e-10));

  const ComplexVector unnormalized{1, 1, 0, 0};
  CHECK(kind_of([&] { from_pure(unnormalized, {2, 2}); }) == ErrorKind::not_normalized);
}

TEST_CASE("Werner family") {
  CHECK(max_abs_diff(werner(0.5).matrix(), 0.25 * ComplexMatrix::identity(4)) < 1e-15);
  CHECK(werner(0.5).purity() == doctest::Approx(0.25));
  const ComplexVector singlet{0, kS, -kS, 0};
  CHECK(max_abs_diff(werner(-1.0).matrix(), ComplexMatrix::outer(singlet, singlet)) < 1e-15);
  CHECK(werner(-1.0).purity() == doctest::Approx(1.0));
  CHECK(werner(1.0).purity() == doctest::Approx(1.0 / 3.0));
  for (int i = 0; i <= 20; ++i) {
    const double x = -1.0 + 0.1 * i;
    CHECK(werner(x).purity() == doctest::Approx((x * x - x + 1.0) / 3.0).epsilon(1e-12));
  }
  CHECK(kind_of([] { werner(1.5); }) == ErrorKind::out_of_range);
}

TEST_CASE("classical-quantum states") {
  const ComplexMatrix zero_proj{{1, 0}, {0, 0}};
  const ClassicalQuantumSpec single{{1.0, 0.0}, ComplexMatrix::identity(2), {zero_proj, zero_proj}};
  const ComplexVector ket00{1, 0, 0, 0};
  CHECK(max_abs_diff(classical_quantum(single).matrix(), ComplexMatrix::outer(ket00, ket00)) < 1e-15);

  const ClassicalQuantumSpec mixed{
      {0.5, 0.5}, ComplexMatrix::identity(2), {ComplexMatrix{{1, 0}, {0, 0}}, 0.5 * ComplexMatrix{{1, 1}, {1, 1}}}};
  CHECK(classical_quantum(mixed).purity() == doctest::Approx(0.5));
}

TEST_CASE("isotropic family") {
  CHECK(max_abs_diff(isotropic(0.25, 2).matrix(), 0.25 * ComplexMatrix::identity(4)) < 1e-15);
  const auto phi = max_entangled(2);
  CHECK(max_abs_diff(isotropic(1.0, 2).matrix(), ComplexMatrix::outer(phi, phi)) < 1e-15);
  const double f = 0.7;
  const double closed = f * f + (1.0 - f) * (1.0 - f) / 3.0;
  CHECK(std::abs(isotropic(f, 2).purity() - closed) < 1e-12);
}

TEST_CASE("random states") {
  CHECK(random_state({2, 3}, 1, 4).purity() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(max_abs_diff(random_state({2, 2}, 4, 99).matrix(), random_state({2, 2}, 4, 99).matrix()) == 0.0);
  for (std::uint64_t s = 0; s < 10000; ++s) CHECK(min_eigenvalue(random_state({2, 2}, 4, s)) >= 0.0);
}

TEST_CASE("random classical-quantum specs are valid") {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const auto spec = random_classical_quantum_spec({3, 2}, rng);
    double total = 0.0;
    for (double p : spec.probabilities) {
      CHECK(p >= 0.0);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs_diff(spec.basis.adjoint() * spec.basis, ComplexMatrix::identity(3)) < 1e-10);
  }
}

TEST_CASE("Bloch decomposition") {
  const auto mixed = bloch_decompose(werner(0.5));
  CHECK(norm_sq(mixed.x) < 1e-30);
  CHECK(frobenius_sq(mixed.t) < 1e-30);

  const auto bell = bloch_decompose(from_pure(max_entangled(2), {2, 2}));
  const Vec3 diag{1, -1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(bell.x[i]) < 1e-15);
    CHECK(std::abs(bell.y[i]) < 1e-15);
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(bell.t[i][j] - (i == j ? diag[i] : 0.0)) < 1e-15);
  }

  for (double x : {-1.0, -0.3, 0.2, 1.0}) {
    const auto b = bloch_decompose(werner(x));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(b.t[i][j] - (i == j ? (2.0 * x - 1.0) / 3.0 : 0.0)) < 1e-14);
      }
    }
  }

  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto rho = random_state({2, 2}, 4, s);
    const auto b = bloch_decompose(rho);
    CHECK(max_abs_diff(bloch_reconstruct(b).matrix(), rho.matrix()) < 1e-10);
    const double purity = (1.0 + norm_sq(b.x) + norm_sq(b.y) + frobenius_sq(b.t)) / 4.0;
    CHECK(std::abs(purity - rho.purity()) < 1e-10);
  }
}

TEST_CASE("party swap and local unitaries") {
  const auto rho = random_state({2, 3}, 6, 12);
  const auto swapped = swap_parties(rho);
  CHECK(swapped.dims().a == 3);
  CHECK(max_abs_diff(swapped.reduced_a(), rho.reduced_b()) < 1e-14);
  Rng rng(2);
  const auto ua = random_unitary(2, rng);
  const auto ub = random_unitary(3, rng);
  const auto moved = apply_local_unitaries(rho, ua, ub);
  CHECK(moved.purity() == doctest::Approx(rho.purity()).epsilon(1e-12));
  CHECK(max_abs_diff(moved.reduced_a(), ua * rho.reduced_a() * ua.adjoint()) < 1e-12);
}
