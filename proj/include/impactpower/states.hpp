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
#include <vector>

#include "impactpower/linalg.hpp"
#include "impactpower/random.hpp"

namespace impactpower {

/// Tolerance for the Hermiticity, trace and positivity checks on states.
inline constexpr double kStateTol = 1e-9;

/// Validated bipartite density matrix on H_A (x) H_B.
///
/// Invariants: Hermitian, unit trace and positive semidefinite, each to
/// kStateTol. Eigenvalues in [-tol, 0) are clamped to zero and the matrix is
/// renormalized; anything more negative is rejected.
class DensityMatrix {
 public:
  /// Throws DimensionMismatch, NotHermitian, InvalidTrace or NotPositive; the
  /// message names the violated invariant.
  static DensityMatrix from_matrix(Dims dims, ComplexMatrix mat, double tol = kStateTol);

  Dims dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return mat_; }

  /// Tr[rho^2]
  double purity() const;
  ComplexMatrix reduced_a() const { return partial_trace_b(mat_, dims_); }
  ComplexMatrix reduced_b() const { return partial_trace_a(mat_, dims_); }

 private:
  DensityMatrix(Dims dims, ComplexMatrix mat) : dims_(dims), mat_(std::move(mat)) {}

  // Unitary conjugation and party swaps preserve every invariant.
  friend DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);
  friend DensityMatrix swap_parties(const DensityMatrix& rho);

  Dims dims_;
  ComplexMatrix mat_;
};

/// rho = (1/4)(1 (x) 1 + sum x_i s_i (x) 1 + sum y_i 1 (x) s_i + sum T_ij s_i (x) s_j)
struct BlochTwoQubit {
  Vec3 x{};
  Vec3 y{};
  Mat3 t{};
};

/// omega = sum_i p_i |i><i| (x) omega_i on a chosen orthonormal basis of A.
struct ClassicalQuantumSpec {
  std::vector<double> probabilities;
  ComplexMatrix basis;                // columns are |i> on A
  std::vector<ComplexMatrix> blocks;  // omega_i on B
};

DensityMatrix from_pure(std::span<const Complex> vec, Dims dims);

/// Two-qubit Werner state (2 - x)/6 * 1 + (2x - 1)/6 * F, x in [-1, 1].
DensityMatrix werner(double x);

DensityMatrix classical_quantum(const ClassicalQuantumSpec& spec);

/// d x d isotropic state with fidelity f to |Phi+>:
/// (1 - f)/(d^2 - 1) (1 - |Phi+><Phi+|) + f |Phi+><Phi+|.
DensityMatrix isotropic(double f, std::size_t d);

/// Partial trace over a Ginibre purification of the given rank; rank d_A d_B
/// samples the Hilbert-Schmidt measure. Deterministic in `seed`.
DensityMatrix random_state(Dims dims, std::size_t rank, std::uint64_t seed);

/// Random CQ spec: Haar basis on A, Dirichlet(1,...,1) weights, random B blocks.
ClassicalQuantumSpec random_classical_quantum_spec(Dims dims, Rng& rng);

BlochTwoQubit bloch_decompose(const DensityMatrix& rho);
DensityMatrix bloch_reconstruct(const BlochTwoQubit& b);

/// Swap operator F = sum_{k,l} |k><l| (x) |l><k| on C^d (x) C^d.
ComplexMatrix swap_operator(std::size_t d);

/// |Phi+> = sum_k |kk> / sqrt(d)
ComplexVector max_entangled(std::size_t d);

/// Exchanges the roles of A and B.
DensityMatrix swap_parties(const DensityMatrix& rho);

/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& ua,
                                    const ComplexMatrix& ub);

/// Conjugation by a unitary on the whole space.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

}  // namespace impactpower
