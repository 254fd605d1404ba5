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

#include <algorithm>
#include <cmath>
#include <vector>

#include "qoc/states.hpp"

namespace qoc {

namespace detail {
inline double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }
}  // namespace detail

/// |<a|b>|^2. Symmetric and invariant under global phases.
inline double fidelity_pure(const PureState& a, const PureState& b) {
  require(a.dim() == b.dim(), "fidelity_pure: dimension mismatch");
  const complex overlap = a.amplitudes().adjoint() * b.amplitudes();
  return detail::clamp01(std::norm(overlap));
}

/// (1/2) ||a - b||_1 via the eigenvalues of the (Hermitian) difference.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.dim() == b.dim(), "trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix() - b.matrix(),
                                                  Eigen::EigenvaluesOnly);
  return detail::clamp01(0.5 * es.eigenvalues().cwiseAbs().sum());
}

/// 1 - |Tr(U†V)|^2 / N^2, invariant under a global phase of either argument.
inline double gate_infidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  require(u.rows() == u.cols() && v.rows() == v.cols(),
          "gate_infidelity: arguments must be square");
  require(u.rows() == v.rows(), "gate_infidelity: dimension mismatch");
  const double du = unitarity_defect(u);
  if (du > unitary_tol) {
    throw std::invalid_argument("gate_infidelity: first argument not unitary, defect " +
                                std::to_string(du));
  }
  const double dv = unitarity_defect(v);
  if (dv > unitary_tol) {
    throw std::invalid_argument("gate_infidelity: second argument not unitary, defect " +
                                std::to_string(dv));
  }
  const double n = static_cast<double>(u.rows());
  const double overlap = std::abs((u.adjoint() * v).trace());
  return detail::clamp01(1.0 - (overlap * overlap) / (n * n));
}

/// Bures angle arccos(sqrt(F)) between pure states; a metric on ray space.
inline double bures_angle(const PureState& a, const PureState& b) {
  return std::acos(std::sqrt(fidelity_pure(a, b)));
}

/// Reduces rho to the subsystem `keep` of a tensor factorization `dims`.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::size_t>& dims,
                                   std::size_t keep) {
  require(!dims.empty(), "partial_trace: empty dims");
  require(keep < dims.size(), "partial_trace: keep index out of range");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    require(d >= 1, "partial_trace: subsystem dims must be >= 1");
    total *= d;
  }
  require(total == rho.dim(), "partial_trace: product of dims does not match dimension");

  std::size_t pre = 1;
  for (std::size_t q = 0; q < keep; ++q) pre *= dims[q];
  const std::size_t dk = dims[keep];
  std::size_t post = 1;
  for (std::size_t q = keep + 1; q < dims.size(); ++q) post *= dims[q];

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk),
                                          static_cast<Eigen::Index>(dk));
  const auto& m = rho.matrix();
  for (std::size_t s = 0; s < dk; ++s) {
    for (std::size_t t = 0; t < dk; ++t) {
      complex acc = 0.0;
      for (std::size_t a = 0; a < pre; ++a) {
        for (std::size_t b = 0; b < post; ++b) {
          const std::size_t row = (a * dk + s) * post + b;
          const std::size_t col = (a * dk + t) * post + b;
          acc += m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
        }
      }
      out(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

/// Von Neumann entropy (base-2 log, in bits) across the contiguous cut
/// dims[0..cut) | dims[cut..end), computed from the Schmidt spectrum.
inline double bipartite_entropy(const PureState& psi,
                                const std::vector<std::size_t>& dims,
                                std::size_t cut) {
  require(dims.size() >= 2, "bipartite_entropy: need at least two subsystems");
  require(cut >= 1 && cut < dims.size(), "bipartite_entropy: invalid cut");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  require(total == psi.dim(), "bipartite_entropy: product of dims does not match dimension");

  std::size_t d_left = 1;
  for (std::size_t q = 0; q < cut; ++q) d_left *= dims[q];
  const std::size_t d_right = total / d_left;

  ComplexMatrix m(static_cast<Eigen::Index>(d_left), static_cast<Eigen::Index>(d_right));
  for (std::size_t i = 0; i < d_left; ++i) {
    for (std::size_t j = 0; j < d_right; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          psi.amplitudes()(static_cast<Eigen::Index>(i * d_right + j));
    }
  }
  const RealVector sv = m.jacobiSvd().singularValues();
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    const double p = sv(k) * sv(k);
    if (p > 1e-300) entropy -= p * std::log2(p);
  }
  return std::max(0.0, entropy);
}

}  // namespace qoc
