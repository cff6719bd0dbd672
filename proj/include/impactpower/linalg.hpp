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

// Dense complex linear algebra for the small Hilbert spaces handled here
// (total dimension up to ~16). Bipartite indices are A-major: the basis
// vector |i_A, i_B> sits at row i_A * d_B + i_B.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace impactpower {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Default absolute tolerance for Hermiticity checks (max entry deviation).
inline constexpr double kHermitianTol = 1e-9;

/// Local dimensions of a bipartite system H_A (x) H_B.
struct Dims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const noexcept { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |ket><bra|
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  ComplexVector column(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Largest |A_ij - conj(A_ji)|.
double hermitian_deviation(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Cyclic complex Jacobi. Throws NotHermitian when hermitian_deviation(a) > tol
/// and NoConvergence if the off-diagonal mass does not vanish.
HermitianEig hermitian_eigendecompose(const ComplexMatrix& a, double tol = kHermitianTol);

/// Tr[AB] without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum |A_ij|^2 (equals Tr[A^2] for Hermitian A).
double hs_norm_sq(const ComplexMatrix& a);
/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a, double tol = kHermitianTol);

/// Kronecker product, row index (i_A, i_B) with i_A major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace_b(const ComplexMatrix& m, Dims dims);
ComplexMatrix partial_trace_a(const ComplexMatrix& m, Dims dims);

/// Pauli matrix for axis 0 (x), 1 (y) or 2 (z).
const ComplexMatrix& pauli(std::size_t axis);

/// r . sigma for a real 3-vector.
ComplexMatrix bloch_operator(const Vec3& r);

double dot(const Vec3& u, const Vec3& v);
double norm_sq(const Vec3& v);
double frobenius_sq(const Mat3& m);

struct SymmetricEig3 {
  Vec3 eigenvalues;                 // ascending
  std::array<Vec3, 3> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
};

SymmetricEig3 symmetric_eigendecompose(const Mat3& m);

}  // namespace impactpower
