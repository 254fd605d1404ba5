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

#include <utility>

#include "qoc/complex_matrix.hpp"
#include "qoc/rng.hpp"

namespace qoc {

// All three types below are immutable after construction and validate their
// structural invariants up front, so downstream code never re-checks them.

class PureState {
 public:
  explicit PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    check_dimension(static_cast<std::size_t>(amplitudes_.size()));
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > structural_tol) {
      throw std::invalid_argument("PureState: norm deviates from 1 by " +
                                  std::to_string(std::abs(norm - 1.0)));
    }
  }

  /// Rescales the vector to unit norm first; rejects (near-)zero vectors.
  static PureState normalized(ComplexVector amplitudes) {
    const double norm = amplitudes.norm();
    require(norm > 1e-300, "PureState::normalized: zero vector");
    return PureState(amplitudes / norm);
  }

  static PureState basis_state(std::size_t dim, std::size_t index) {
    check_dimension(dim);
    require(index < dim, "PureState::basis_state: index out of range");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(std::move(v));
  }

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// Haar-distributed pure state (normalized complex Gaussian vector).
inline PureState haar_random_state(std::size_t dim, std::uint64_t seed) {
  check_dimension(dim);
  Rng rng(seed);
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = complex(rng.normal(), rng.normal());
  }
  return PureState::normalized(std::move(v));
}

class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    require(matrix_.rows() == matrix_.cols(), "DensityMatrix: matrix must be square");
    check_dimension(static_cast<std::size_t>(matrix_.rows()));
    const double herm = hermiticity_defect(matrix_);
    if (herm > structural_tol) {
      throw std::invalid_argument("DensityMatrix: not Hermitian, defect " +
                                  std::to_string(herm));
    }
    const double trace_err = std::abs(matrix_.trace() - complex(1.0, 0.0));
    if (trace_err > structural_tol) {
      throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                  std::to_string(trace_err));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
    const double min_eval = es.eigenvalues().minCoeff();
    if (min_eval < -structural_tol) {
      throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                  std::to_string(min_eval));
    }
  }

  static DensityMatrix pure(const PureState& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    check_dimension(dim);
    return DensityMatrix(identityish(dim) / static_cast<double>(dim));
  }

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double purity() const { return (matrix_ * matrix_).trace().real(); }

 private:
  static ComplexMatrix identityish(std::size_t dim) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim));
  }

  ComplexMatrix matrix_;
};

/// Drift + control Hamiltonian of H(t) = H_D + gamma(t) H_C, adimensional
/// units (hbar = 1 throughout; there is deliberately no hbar parameter).
class HamiltonianPair {
 public:
  HamiltonianPair(ComplexMatrix drift, ComplexMatrix control)
      : drift_(std::move(drift)), control_(std::move(control)) {
    require(drift_.rows() == drift_.cols(), "HamiltonianPair: drift must be square");
    require(control_.rows() == control_.cols(), "HamiltonianPair: control must be square");
    require(drift_.rows() == control_.rows(),
            "HamiltonianPair: drift and control dimensions differ");
    check_dimension(static_cast<std::size_t>(drift_.rows()));
    const double dd = hermiticity_defect(drift_);
    if (dd > structural_tol) {
      throw std::invalid_argument("HamiltonianPair: drift not Hermitian, defect " +
                                  std::to_string(dd));
    }
    const double dc = hermiticity_defect(control_);
    if (dc > structural_tol) {
      throw std::invalid_argument("HamiltonianPair: control not Hermitian, defect " +
                                  std::to_string(dc));
    }
  }

  /// Rescales both operators to unit spectral norm (||H_D|| = ||H_C|| = 1).
  static HamiltonianPair normalized(const ComplexMatrix& drift,
                                    const ComplexMatrix& control) {
    const double nd = operator_norm_hermitian(drift);
    const double nc = operator_norm_hermitian(control);
    require(nd > 1e-300, "HamiltonianPair::normalized: zero drift operator");
    require(nc > 1e-300, "HamiltonianPair::normalized: zero control operator");
    return HamiltonianPair(drift / nd, control / nc);
  }

  std::size_t dim() const { return static_cast<std::size_t>(drift_.rows()); }
  const ComplexMatrix& drift() const { return drift_; }
  const ComplexMatrix& control() const { return control_; }

  ComplexMatrix at(double gamma) const { return drift_ + gamma * control_; }

 private:
  ComplexMatrix drift_;
  ComplexMatrix control_;
};

}  // namespace qoc
