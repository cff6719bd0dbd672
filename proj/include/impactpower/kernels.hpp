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

// Data-parallel reduction and map kernels. Each kernel exists twice: a serial
// reference in `serial::` and an OpenMP version in `omp::`. Both return
// bit-identical results: reductions break value ties by the smaller index, and
// maps write results by input index, never by completion order.

#include <cstddef>
#include <exception>
#include <limits>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace impactpower::kernels {

struct IndexedValue {
  double value = 0.0;
  std::size_t index = 0;
};

namespace detail {

inline bool beats_max(double v, std::size_t i, const IndexedValue& best) {
  return v > best.value || (v == best.value && i < best.index);
}

inline bool beats_min(double v, std::size_t i, const IndexedValue& best) {
  return v < best.value || (v == best.value && i < best.index);
}

}  // namespace detail

namespace serial {

template <typename F>
IndexedValue argmax(std::size_t n, F&& f) {
  IndexedValue best{-std::numeric_limits<double>::infinity(), n};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(i);
    if (detail::beats_max(v, i, best)) best = {v, i};
  }
  return best;
}

template <typename F>
IndexedValue argmin(std::size_t n, F&& f) {
  IndexedValue best{std::numeric_limits<double>::infinity(), n};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(i);
    if (detail::beats_min(v, i, best)) best = {v, i};
  }
  return best;
}

template <typename F>
auto map(std::size_t n, F&& f) {
  using R = std::decay_t<decltype(f(std::size_t{}))>;
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

}  // namespace serial

namespace omp {

template <typename F>
IndexedValue argmax(std::size_t n, F&& f) {
  IndexedValue best{-std::numeric_limits<double>::infinity(), n};
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    IndexedValue local{-std::numeric_limits<double>::infinity(), n};
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const double v = f(idx);
      if (detail::beats_max(v, idx, local)) local = {v, idx};
    }
#pragma omp critical(impactpower_argmax)
    if (detail::beats_max(local.value, local.index, best)) best = local;
  }
  return best;
}

template <typename F>
IndexedValue argmin(std::size_t n, F&& f) {
  IndexedValue best{std::numeric_limits<double>::infinity(), n};
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    IndexedValue local{std::numeric_limits<double>::infinity(), n};
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const double v = f(idx);
      if (detail::beats_min(v, idx, local)) local = {v, idx};
    }
#pragma omp critical(impactpower_argmin)
    if (detail::beats_min(local.value, local.index, best)) best = local;
  }
  return best;
}

/// Exceptions thrown by `f` are captured; the one from the smallest index is
/// rethrown after the parallel region.
template <typename F>
auto map(std::size_t n, F&& f) {
  using R = std::decay_t<decltype(f(std::size_t{}))>;
  static_assert(std::is_default_constructible_v<R>);
  std::vector<R> out(n);
  std::exception_ptr failure;
  std::size_t failed_at = n;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = f(idx);
    } catch (...) {
#pragma omp critical(impactpower_map_failure)
      if (idx < failed_at) {
        failed_at = idx;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace omp

/// Thread count used by the omp:: kernels; 0 restores the runtime default.
inline void set_thread_count(int threads) {
  if (threads > 0) {
    omp_set_num_threads(threads);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
}

}  // namespace impactpower::kernels
