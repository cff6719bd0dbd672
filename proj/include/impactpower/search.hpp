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

// Derivative-free one- and multi-dimensional search helpers shared by the
// numeric maximizations and the brute-force oracles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "impactpower/linalg.hpp"

namespace impactpower::search {

struct Point1d {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of `f` on [lo, hi] until the bracket is
/// narrower than `tol`. Returns the best point evaluated, which is never worse
/// than f at the bracket midpoint.
template <typename F>
Point1d golden_section_max(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  Point1d best{0.5 * (lo + hi), f(0.5 * (lo + hi))};
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 300 && hi - lo > tol; ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

/// Fibonacci lattice of `n` nearly uniform points on S^2, rotated by the
/// orthogonal matrix `rotation`.
inline std::vector<Vec3> fibonacci_sphere(std::size_t n, const Mat3& rotation) {
  std::vector<Vec3> points;
  points.reserve(n);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    const Vec3 p{radius * std::cos(phi), radius * std::sin(phi), z};
    Vec3 q{};
    for (std::size_t r = 0; r < 3; ++r) q[r] = dot(rotation[r], p);
    points.push_back(q);
  }
  return points;
}

inline Vec3 spherical_to_axis(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

inline std::pair<double, double> axis_to_spherical(const Vec3& r) {
  const double theta = std::acos(std::clamp(r[2], -1.0, 1.0));
  const double phi = std::atan2(r[1], r[0]);
  return {theta, phi};
}

struct CompassOptions {
  double initial_step = 0.1;
  double final_step = 1e-8;
  std::size_t max_evaluations = 2'000'000;
};

struct PointNd {
  std::vector<double> x;
  double value = 0.0;
};

/// Coordinate (compass) descent: try +-step along each coordinate, keep any
/// strict improvement, halve the step when a full sweep fails.
template <typename F>
PointNd compass_minimize(F&& f, std::vector<double> x, const CompassOptions& options = {}) {
  double fx = f(x);
  std::size_t evaluations = 1;
  double step = options.initial_step;
  while (step >= options.final_step && evaluations < options.max_evaluations) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (const double dir : {1.0, -1.0}) {
        const double saved = x[i];
        x[i] = saved + dir * step;
        const double fy = f(x);
        ++evaluations;
        if (fy < fx) {
          fx = fy;
          improved = true;
          break;
        }
        x[i] = saved;
      }
    }
    if (!improved) step *= 0.5;
  }
  return {std::move(x), fx};
}

}  // namespace impactpower::search
