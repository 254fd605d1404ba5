// Copyright 2026 The QOC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "qoc/common.hpp"

namespace qoc {

using complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr complex imag_unit{0.0, 1.0};

/// Entrywise comparison with an explicit absolute tolerance. There is no
/// operator== for matrices in this library on purpose.
inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

/// Frobenius norm of A - A†; zero for exactly Hermitian inputs.
inline double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).norm();
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = structural_tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

/// Frobenius norm of U†U - I.
inline double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

inline bool is_unitary(const ComplexMatrix& u, double tol = unitary_tol) {
  return unitarity_defect(u) <= tol;
}

/// Hilbert-Schmidt inner product Tr(A†B).
inline complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace();
}

/// Hilbert-Schmidt (Frobenius) norm.
inline double hs_norm(const ComplexMatrix& a) { return a.norm(); }

/// Spectral norm, i.e. the largest singular value.
inline double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  return a.jacobiSvd().singularValues()(0);
}

/// Spectral norm of a Hermitian matrix via its eigenvalues (cheaper than SVD).
inline double operator_norm_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// exp(-i t H) for Hermitian H via eigendecomposition. The result is unitary
/// to machine precision for any finite t.
inline ComplexMatrix expm_hermitian_scaled(const ComplexMatrix& h, double t) {
  require(h.rows() == h.cols(), "expm_hermitian_scaled: matrix must be square");
  check_dimension(static_cast<std::size_t>(h.rows()));
  require(std::isfinite(t), "expm_hermitian_scaled: time must be finite");
  const double defect = hermiticity_defect(h);
  if (defect > structural_tol) {
    throw std::invalid_argument(
        "expm_hermitian_scaled: input is not Hermitian, ||H - H†|| = " +
        std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const auto& evals = es.eigenvalues();
  ComplexVector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases(k) = std::exp(complex(0.0, -t * evals(k)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qoc
