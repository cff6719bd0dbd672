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

#include "impactpower/random.hpp"

#include <cmath>

namespace impactpower {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = complex_normal(rng);
  return g;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  // Modified Gram-Schmidt on the columns; normalizing each column to a
  // positive real R diagonal is what makes the result Haar distributed.
  ComplexMatrix q = ginibre(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  double norm = 0.0;
  for (auto& z : v) {
    z = complex_normal(rng);
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (auto& z : v) z /= norm;
  return v;
}

Vec3 random_axis(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 r{};
  double norm = 0.0;
  do {
    for (auto& c : r) c = normal(rng);
    norm = std::sqrt(norm_sq(r));
  } while (norm < 1e-12);
  for (auto& c : r) c /= norm;
  return r;
}

}  // namespace impactpower
