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
#include <vector>

#include "qoc/operators.hpp"
#include "qoc/states.hpp"

// Test-only oracles. Each one is an independent computational route for a
// quantity the library computes some other way; they stay deliberately
// simple and slow.
namespace qoc::testing {

/// exp(-i t H) by scaling-and-squaring Taylor series. Independent of the
/// library's eigendecomposition route.
inline ComplexMatrix taylor_expm(const ComplexMatrix& h, double t) {
  ComplexMatrix a = complex(0.0, -t) * h;
  int squarings = 0;
  double norm = a.cwiseAbs().sum();
  while (norm > 0.25 && squarings < 60) {
    a *= 0.5;
    norm *= 0.5;
    ++squarings;
  }
  const auto n = a.rows();
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 60; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Schmidt spectrum (squared singular values, descending) of a pure state
/// reshaped across dims d_left x d_right.
inline std::vector<double> schmidt_spectrum(const PureState& psi, std::size_t d_left,
                                            std::size_t d_right) {
  ComplexMatrix m(static_cast<Eigen::Index>(d_left), static_cast<Eigen::Index>(d_right));
  for (std::size_t i = 0; i < d_left; ++i) {
    for (std::size_t j = 0; j < d_right; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          psi.amplitudes()(static_cast<Eigen::Index>(i * d_right + j));
    }
  }
  const RealVector sv = m.jacobiSvd().singularValues();
  std::vector<double> spectrum;
  for (Eigen::Index k = 0; k < sv.size(); ++k) spectrum.push_back(sv(k) * sv(k));
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

inline std::vector<double> eigenvalues_descending(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    out.push_back(es.eigenvalues()(k));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Haar-ish random unitary via QR of a complex Ginibre matrix.
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const complex d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

/// Random full-rank density matrix (normalized Ginibre G G†).
inline DensityMatrix random_density(std::size_t dim, Rng& rng) {
  ComplexMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = complex(rng.normal(), rng.normal());
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

}  // namespace qoc::testing
