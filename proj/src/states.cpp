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

#include "impactpower/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "impactpower/error.hpp"

namespace impactpower {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void check_unit_interval(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    throw Error(ErrorKind::out_of_range, std::string(what) + " = " + fmt_double(v) +
                                             " outside [" + fmt_double(lo) + ", " +
                                             fmt_double(hi) + "]");
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(Dims dims, ComplexMatrix mat, double tol) {
  if (dims.a == 0 || dims.b == 0 || !mat.is_square() || mat.rows() != dims.total()) {
    throw Error(ErrorKind::dimension_mismatch,
                "state matrix " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                    " does not match dims (" + std::to_string(dims.a) + ", " +
                    std::to_string(dims.b) + ")");
  }
  const double dev = hermitian_deviation(mat);
  if (dev > tol) {
    throw Error(ErrorKind::not_hermitian,
                "Hermiticity invariant violated: max |rho - rho^dagger| = " + fmt_double(dev));
  }
  mat = 0.5 * (mat + mat.adjoint());
  const Complex tr = mat.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorKind::invalid_trace,
                "trace invariant violated: Tr[rho] = " + fmt_double(tr.real()));
  }

  auto eig = hermitian_eigendecompose(mat, tol);
  const double min_eig = eig.eigenvalues.front();
  if (min_eig < -tol) {
    throw Error(ErrorKind::not_positive,
                "positivity invariant violated: smallest eigenvalue " + fmt_double(min_eig));
  }
  if (min_eig < 0.0) {
    double total = 0.0;
    for (auto& lambda : eig.eigenvalues) {
      lambda = std::max(lambda, 0.0);
      total += lambda;
    }
    ComplexMatrix rebuilt(mat.rows(), mat.cols());
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
      if (eig.eigenvalues[k] == 0.0) continue;
      const auto col = eig.eigenvectors.column(k);
      rebuilt += ComplexMatrix::outer(col, col) * Complex(eig.eigenvalues[k] / total);
    }
    mat = std::move(rebuilt);
  }
  return DensityMatrix(dims, std::move(mat));
}

double DensityMatrix::purity() const {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  return hs_norm_sq(mat_);
}

DensityMatrix from_pure(std::span<const Complex> vec, Dims dims) {
  double norm = 0.0;
  for (const auto& z : vec) norm += std::norm(z);
  norm = std::sqrt(norm);
  if (std::abs(norm - 1.0) > kStateTol) {
    throw Error(ErrorKind::not_normalized, "state vector norm " + fmt_double(norm));
  }
  if (vec.size() != dims.total()) {
    throw Error(ErrorKind::dimension_mismatch,
                "state vector length " + std::to_string(vec.size()) + " does not match dims");
  }
  return DensityMatrix::from_matrix(dims, ComplexMatrix::outer(vec, vec));
}

ComplexMatrix swap_operator(std::size_t d) {
  ComplexMatrix f(d * d, d * d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) f(k * d + l, l * d + k) = 1.0;
  }
  return f;
}

ComplexVector max_entangled(std::size_t d) {
  ComplexVector v(d * d);
  for (std::size_t k = 0; k < d; ++k) v[k * d + k] = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

DensityMatrix werner(double x) {
  check_unit_interval(x, -1.0, 1.0, "Werner parameter x");
  ComplexMatrix rho = ComplexMatrix::identity(4) * Complex((2.0 - x) / 6.0);
  rho += swap_operator(2) * Complex((2.0 * x - 1.0) / 6.0);
  return DensityMatrix::from_matrix({2, 2}, std::move(rho));
}

DensityMatrix isotropic(double f, std::size_t d) {
  check_unit_interval(f, 0.0, 1.0, "isotropic fidelity f");
  if (d < 2) throw Error(ErrorKind::out_of_range, "isotropic dimension must be >= 2");
  const auto phi = max_entangled(d);
  const ComplexMatrix proj = ComplexMatrix::outer(phi, phi);
  const double dd = static_cast<double>(d * d);
  ComplexMatrix rho = (ComplexMatrix::identity(d * d) - proj) * Complex((1.0 - f) / (dd - 1.0));
  rho += proj * Complex(f);
  return DensityMatrix::from_matrix({d, d}, std::move(rho));
}

DensityMatrix random_state(Dims dims, std::size_t rank, std::uint64_t seed) {
  const std::size_t n = dims.total();
  if (n == 0 || rank < 1 || rank > n) {
    throw Error(ErrorKind::out_of_range,
                "rank " + std::to_string(rank) + " outside [1, " + std::to_string(n) + "]");
  }
  Rng rng(seed);
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix::from_matrix(dims, std::move(rho));
}

ClassicalQuantumSpec random_classical_quantum_spec(Dims dims, Rng& rng) {
  ClassicalQuantumSpec spec;
  std::exponential_distribution<double> expo(1.0);
  double total = 0.0;
  for (std::size_t i = 0; i < dims.a; ++i) {
    spec.probabilities.push_back(expo(rng));
    total += spec.probabilities.back();
  }
  for (auto& p : spec.probabilities) p /= total;
  spec.basis = random_unitary(dims.a, rng);
  for (std::size_t i = 0; i < dims.a; ++i) {
    spec.blocks.push_back(random_state({dims.b, 1}, dims.b, rng()).matrix());
  }
  return spec;
}

DensityMatrix classical_quantum(const ClassicalQuantumSpec& spec) {
  const std::size_t terms = spec.probabilities.size();
  if (terms == 0 || spec.blocks.size() != terms || spec.basis.cols() != terms ||
      spec.basis.rows() < terms) {
    throw Error(ErrorKind::dimension_mismatch,
                "classical-quantum spec needs one basis column and one block per weight");
  }
  double total = 0.0;
  for (double p : spec.probabilities) {
    if (p < 0.0) throw Error(ErrorKind::out_of_range, "negative weight " + fmt_double(p));
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::not_normalized, "weights sum to " + fmt_double(total));
  }
  const ComplexMatrix gram = spec.basis.adjoint() * spec.basis;
  const double ortho = std::sqrt(hs_norm_sq(gram - ComplexMatrix::identity(terms)));
  if (ortho > 1e-10) {
    throw Error(ErrorKind::not_normalized, "basis not orthonormal, |V^dagger V - 1| = " +
                                               fmt_double(ortho));
  }
  const std::size_t db = spec.blocks.front().rows();
  const Dims dims{spec.basis.rows(), db};
  ComplexMatrix omega(dims.total(), dims.total());
  for (std::size_t i = 0; i < terms; ++i) {
    const auto block = DensityMatrix::from_matrix({db, 1}, spec.blocks[i]);
    const auto ket = spec.basis.column(i);
    omega += tensor(ComplexMatrix::outer(ket, ket), block.matrix()) *
             Complex(spec.probabilities[i]);
  }
  return DensityMatrix::from_matrix(dims, std::move(omega));
}

BlochTwoQubit bloch_decompose(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) {
    throw Error(ErrorKind::dimension_mismatch, "Bloch decomposition needs a two-qubit state");
  }
  const auto id = ComplexMatrix::identity(2);
  const auto& m = rho.matrix();
  BlochTwoQubit b;
  for (std::size_t i = 0; i < 3; ++i) {
    b.x[i] = trace_of_product(m, tensor(pauli(i), id)).real();
    b.y[i] = trace_of_product(m, tensor(id, pauli(i))).real();
    for (std::size_t j = 0; j < 3; ++j) {
      b.t[i][j] = trace_of_product(m, tensor(pauli(i), pauli(j))).real();
    }
  }
  return b;
}

DensityMatrix bloch_reconstruct(const BlochTwoQubit& b) {
  const auto id = ComplexMatrix::identity(2);
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (std::size_t i = 0; i < 3; ++i) {
    m += tensor(pauli(i), id) * Complex(b.x[i]);
    m += tensor(id, pauli(i)) * Complex(b.y[i]);
    for (std::size_t j = 0; j < 3; ++j) m += tensor(pauli(i), pauli(j)) * Complex(b.t[i][j]);
  }
  m *= Complex(0.25);
  return DensityMatrix::from_matrix({2, 2}, std::move(m));
}

DensityMatrix swap_parties(const DensityMatrix& rho) {
  const Dims d = rho.dims();
  const auto& m = rho.matrix();
  ComplexMatrix out(d.total(), d.total());
  for (std::size_t ia = 0; ia < d.a; ++ia) {
    for (std::size_t ib = 0; ib < d.b; ++ib) {
      for (std::size_t ja = 0; ja < d.a; ++ja) {
        for (std::size_t jb = 0; jb < d.b; ++jb) {
          out(ib * d.a + ia, jb * d.a + ja) = m(ia * d.b + ib, ja * d.b + jb);
        }
      }
    }
  }
  return DensityMatrix({d.b, d.a}, std::move(out));
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (!u.is_square() || u.rows() != rho.dims().total()) {
    throw Error(ErrorKind::dimension_mismatch, "conjugating unitary has the wrong size");
  }
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(rho.dims(), std::move(m));
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& ua,
                                    const ComplexMatrix& ub) {
  if (ua.rows() != rho.dims().a || ub.rows() != rho.dims().b) {
    throw Error(ErrorKind::dimension_mismatch, "local unitaries do not match the state dims");
  }
  return conjugate(rho, tensor(ua, ub));
}

}  // namespace impactpower
