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

#include "qoc/operators.hpp"
#include "qoc/states.hpp"

namespace qoc {

/// H_D = sigma_z, H_C = sigma_x; both already unit spectral norm.
inline HamiltonianPair single_qubit_preset() {
  return HamiltonianPair(pauli_z(), pauli_x());
}

/// Open-boundary transverse-field Ising chain,
///   H_D = J sum_i Z_i Z_{i+1} + h sum_i X_i,   H_C = X on site 0,
/// both rescaled to unit spectral norm. Controlling a single end site breaks
/// the chain's reflection symmetry, which keeps the closure generic.
inline HamiltonianPair ising_chain_preset(std::size_t n_qubits, double coupling,
                                          double field) {
  require(n_qubits >= 2, "ising_chain_preset: need at least two sites");
  require(n_qubits <= 10, "ising_chain_preset: chain preset capped at 10 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix drift =
      ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i + 1 < n_qubits; ++i) {
    drift += coupling * (site_operator(pauli_z(), i, n_qubits) *
                         site_operator(pauli_z(), i + 1, n_qubits));
  }
  for (std::size_t i = 0; i < n_qubits; ++i) {
    drift += field * site_operator(pauli_x(), i, n_qubits);
  }
  const ComplexMatrix control = site_operator(pauli_x(), 0, n_qubits);
  return HamiltonianPair::normalized(drift, control);
}

/// Random Hermitian pair (GUE), both rescaled to unit spectral norm.
inline HamiltonianPair random_pair_preset(std::size_t dim, std::uint64_t seed) {
  check_dimension(dim);
  Rng rng(derive_seed(seed, 0x50414952));  // "PAIR" stream
  const ComplexMatrix drift = random_hermitian(dim, rng);
  const ComplexMatrix control = random_hermitian(dim, rng);
  return HamiltonianPair::normalized(drift, control);
}

}  // namespace qoc
