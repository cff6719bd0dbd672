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

#include "impactpower/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "impactpower/error.hpp"

namespace impactpower {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw Error(ErrorKind::dimension_mismatch, std::string(op) + ": matrix is not square");
  }
}

double off_diagonal_sq(const ComplexMatrix& a) {
  double off = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) off += std::norm(a(i, j));
    }
  }
  return off;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::dimension_mismatch,
                "entry count " + std::to_string(data_.size()) + " does not match " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::dimension_mismatch, "ragged initializer list");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  require_square(*this, "trace");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorKind::dimension_mismatch,
                "multiply: inner dimensions " + std::to_string(lhs.cols()) + " and " +
                    std::to_string(rhs.rows()));
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::dimension_mismatch, "matrix-vector: size mismatch");
  }
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

double hermitian_deviation(const ComplexMatrix& a) {
  require_square(a, "hermitian_deviation");
  double dev = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return dev;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.is_square() && hermitian_deviation(a) <= tol;
}

HermitianEig hermitian_eigendecompose(const ComplexMatrix& input, double tol) {
  require_square(input, "hermitian_eigendecompose");
  const double dev = hermitian_deviation(input);
  if (dev > tol) {
    throw Error(ErrorKind::not_hermitian,
                "max |A - A^dagger| entry " + std::to_string(dev) + " exceeds " +
                    std::to_string(tol));
  }
  const std::size_t n = input.rows();

  // Work on the exactly Hermitian part.
  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::sqrt(hs_norm_sq(a));
  const double target = 1e-15 * std::max(scale, 1e-300);
  constexpr int kMaxSweeps = 100;
  bool converged = n <= 1 || std::sqrt(off_diagonal_sq(a)) <= target;

  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // The phase exp(-i phi) on column q makes the (p,q) block real, then a
        // real rotation annihilates it.
        const Complex phase = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
    converged = std::sqrt(off_diagonal_sq(a)) <= target;
  }
  if (!converged && std::sqrt(off_diagonal_sq(a)) > 1e-12 * std::max(scale, 1.0)) {
    throw Error(ErrorKind::no_convergence,
                "Jacobi sweeps exhausted with off-diagonal norm " +
                    std::to_string(std::sqrt(off_diagonal_sq(a))));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorKind::dimension_mismatch, "trace_of_product: incompatible shapes");
  }
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  }
  return t;
}

double hs_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return s;
}

double trace_norm(const ComplexMatrix& a, double tol) {
  const auto eig = hermitian_eigendecompose(a, tol);
  double s = 0.0;
  for (double lambda : eig.eigenvalues) s += std::abs(lambda);
  return s;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex x = a(ia, ja);
      if (x == Complex{}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = x * b(ib, jb);
        }
      }
    }
  }
  return out;
}

namespace {

void require_bipartite(const ComplexMatrix& m, Dims dims, const char* op) {
  if (!m.is_square() || m.rows() != dims.total() || dims.a == 0 || dims.b == 0) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(op) + ": matrix " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " does not match dims (" +
                    std::to_string(dims.a) + ", " + std::to_string(dims.b) + ")");
  }
}

}  // namespace

ComplexMatrix partial_trace_b(const ComplexMatrix& m, Dims dims) {
  require_bipartite(m, dims, "partial_trace_b");
  ComplexMatrix out(dims.a, dims.a);
  for (std::size_t i = 0; i < dims.a; ++i) {
    for (std::size_t j = 0; j < dims.a; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dims.b; ++k) s += m(i * dims.b + k, j * dims.b + k);
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& m, Dims dims) {
  require_bipartite(m, dims, "partial_trace_a");
  ComplexMatrix out(dims.b, dims.b);
  for (std::size_t i = 0; i < dims.b; ++i) {
    for (std::size_t j = 0; j < dims.b; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dims.a; ++k) s += m(k * dims.b + i, k * dims.b + j);
      out(i, j) = s;
    }
  }
  return out;
}

const ComplexMatrix& pauli(std::size_t axis) {
  static const std::array<ComplexMatrix, 3> paulis = {
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (axis > 2) throw Error(ErrorKind::out_of_range, "Pauli axis must be 0, 1 or 2");
  return paulis[axis];
}

ComplexMatrix bloch_operator(const Vec3& r) {
  ComplexMatrix m(2, 2);
  for (std::size_t i = 0; i < 3; ++i) m += pauli(i) * Complex(r[i]);
  return m;
}

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

double norm_sq(const Vec3& v) { return dot(v, v); }

double frobenius_sq(const Mat3& m) {
  double s = 0.0;
  for (const auto& row : m) s += norm_sq(row);
  return s;
}

SymmetricEig3 symmetric_eigendecompose(const Mat3& m) {
  ComplexMatrix c(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = 0.5 * (m[i][j] + m[j][i]);
  }
  // A real symmetric input keeps every Jacobi phase at +-1, so the
  // eigenvectors come out real.
  const auto eig = hermitian_eigendecompose(c);
  SymmetricEig3 out{};
  for (std::size_t k = 0; k < 3; ++k) {
    out.eigenvalues[k] = eig.eigenvalues[k];
    for (std::size_t i = 0; i < 3; ++i) out.eigenvectors[k][i] = eig.eigenvectors(i, k).real();
  }
  return out;
}

}  // namespace impactpower
