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

#include <cstdint>
#include <random>

#include "impactpower/linalg.hpp"

namespace impactpower {

/// Caller-owned random stream. Parallel code derives one stream per work item
/// via derive_seed so results do not depend on scheduling.
using Rng = std::mt19937_64;

/// SplitMix64 mix of (seed, index), used to fan one seed out to work items.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Standard complex normal: real and imaginary parts each N(0, 1/2).
Complex complex_normal(Rng& rng);

/// Matrix with iid complex_normal entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// Uniformly distributed unit vector in C^n.
ComplexVector random_unit_vector(std::size_t n, Rng& rng);

/// Uniformly distributed point on the unit sphere S^2.
Vec3 random_axis(Rng& rng);

}  // namespace impactpower
