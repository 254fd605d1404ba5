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

#include "qoc/complex_matrix.hpp"
#include "qoc/rng.hpp"

namespace qoc {

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << complex(0, 0), complex(0, -1), complex(0, 1), complex(0, 0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

/// op acting on `site` of an n-qubit register (identity elsewhere).
inline ComplexMatrix site_operator(const ComplexMatrix& op, std::size_t site,
                                   std::size_t n_qubits) {
  require(op.rows() == 2 && op.cols() == 2, "site_operator: op must be 2x2");
  require(site < n_qubits, "site_operator: site index out of range");
  ComplexMatrix out = identity(1);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    out = kron(out, q == site ? op : identity(2));
  }
  return out;
}

/// GUE-style random Hermitian matrix, entries O(1).
inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  check_dimension(dim);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = complex(rng.normal(), rng.normal());
    }
  }
  return 0.5 * (a + a.adjoint()).eval();
}

}  // namespace qoc
