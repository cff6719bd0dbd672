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

// Serial reference kernels against their OpenMP counterparts on the three hot
// loops: the time-grid maximization, axis sampling and ensemble reports.

#include <benchmark/benchmark.h>

#include <numbers>

#include "impactpower/correlations.hpp"
#include "impactpower/dynamics.hpp"
#include "impactpower/kernels.hpp"
#include "impactpower/random.hpp"
#include "impactpower/search.hpp"
#include "impactpower/states.hpp"

namespace {

using namespace impactpower;

struct TimeGridFixture {
  ImpactCoefficients coeffs;
  double step = 0.0;
  std::size_t points = 100000;

  TimeGridFixture() {
    Rng rng(1);
    const auto rho = random_state({4, 2}, 8, 1);
    coeffs = impact_coefficients(rho, random_nondegenerate_hamiltonian(4, rng));
    step = 2.0 * std::numbers::pi / coeffs.min_gap() / static_cast<double>(points);
  }
};

const TimeGridFixture& time_grid() {
  static const TimeGridFixture fixture;
  return fixture;
}

template <class Kernel>
void time_grid_max(benchmark::State& state, Kernel kernel) {
  const auto& f = time_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(f.points, [&](std::size_t i) {
      return f.coeffs.profile(f.step * static_cast<double>(i + 1));
    }));
  }
}

template <class Kernel>
void axis_sampling(benchmark::State& state, Kernel kernel) {
  const auto rho = random_state({2, 2}, 4, 3);
  const Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const auto axes = search::fibonacci_sphere(static_cast<std::size_t>(state.range(0)), id);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(axes.size(), [&](std::size_t i) {
      return trace_impact_power(rho, LocalHamiltonian::qubit(axes[i])).value;
    }));
  }
}

template <class Map>
void ensemble_report(benchmark::State& state, Map map) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(map(n, [](std::size_t i) { return report(random_state({2, 3}, 6, i)).discord; }));
  }
}

auto serial_argmax = [](std::size_t n, auto f) { return kernels::serial::argmax(n, f); };
auto omp_argmax = [](std::size_t n, auto f) { return kernels::omp::argmax(n, f); };
auto serial_argmin = [](std::size_t n, auto f) { return kernels::serial::argmin(n, f); };
auto omp_argmin = [](std::size_t n, auto f) { return kernels::omp::argmin(n, f); };
auto serial_map = [](std::size_t n, auto f) { return kernels::serial::map(n, f); };
auto omp_map = [](std::size_t n, auto f) { return kernels::omp::map(n, f); };

BENCHMARK_CAPTURE(time_grid_max, serial, serial_argmax);
BENCHMARK_CAPTURE(time_grid_max, omp, omp_argmax);
BENCHMARK_CAPTURE(axis_sampling, serial, serial_argmin)->Arg(1000);
BENCHMARK_CAPTURE(axis_sampling, omp, omp_argmin)->Arg(1000);
BENCHMARK_CAPTURE(ensemble_report, serial, serial_map)->Arg(1000);
BENCHMARK_CAPTURE(ensemble_report, omp, omp_map)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
