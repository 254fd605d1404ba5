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

#include <vector>

#include "qoc/states.hpp"

namespace qoc {

// Orthonormalized basis (Hilbert-Schmidt inner product) of the dynamical Lie
// algebra generated by {i H_D, i H_C}. Elements are skew-Hermitian; the
// algebra is a real vector space, so Gram-Schmidt coefficients are real.
struct LieClosure {
  std::size_t dim = 0;        // Hilbert space dimension N
  std::vector<ComplexMatrix> basis;
  std::size_t dimension = 0;  // basis.size()
  bool converged = false;
  std::size_t depth_reached = 0;
};

namespace detail {

// Projects out the components of `candidate` along `basis` (twice, for
// numerical robustness) and returns the residual norm.
inline double orthogonalize_against(const std::vector<ComplexMatrix>& basis,
                                    ComplexMatrix& candidate) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const double coeff = hs_inner(b, candidate).real();
      candidate -= coeff * b;
    }
  }
  return hs_norm(candidate);
}

}  // namespace detail

/// Commutator closure of {i H_D, i H_C}: repeatedly appends orthonormalized
/// commutators of all pairs until no residual exceeds tol, the algebra is all
/// of u(N), or max_depth commutator generations have been taken.
inline LieClosure lie_closure(const HamiltonianPair& h, double tol = 1e-10,
                              std::size_t max_depth = 16) {
  require(tol > 0.0 && tol <= 1e-6, "lie_closure: tol must be in (0, 1e-6]");
  require(max_depth >= 1, "lie_closure: max_depth must be at least 1");

  LieClosure closure;
  closure.dim = h.dim();
  const std::size_t full = closure.dim * closure.dim;  // dim of u(N)

  auto try_append = [&](ComplexMatrix candidate) {
    const double residual = detail::orthogonalize_against(closure.basis, candidate);
    if (residual <= tol) return false;
    closure.basis.push_back(candidate / residual);
    return true;
  };

  try_append(imag_unit * h.drift());
  try_append(imag_unit * h.control());

  std::size_t frontier_begin = 0;  // elements not yet commutated with everything
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    closure.depth_reached = depth;
    const std::size_t level_end = closure.basis.size();
    bool grew = false;
    for (std::size_t i = frontier_begin; i < level_end && closure.basis.size() < full; ++i) {
      for (std::size_t j = 0; j < i && closure.basis.size() < full; ++j) {
        const ComplexMatrix& a = closure.basis[i];
        const ComplexMatrix& b = closure.basis[j];
        grew |= try_append(a * b - b * a);
      }
    }
    frontier_begin = level_end;
    if (closure.basis.size() >= full) {
      closure.converged = true;
      break;
    }
    if (!grew && closure.basis.size() == level_end) {
      closure.converged = true;
      break;
    }
  }
  closure.dimension = closure.basis.size();
  return closure;
}

/// Complete dynamical Lie algebra in the su(N) sense: the identity direction
/// is physically irrelevant phase, so dimension >= N^2 - 1 counts as
/// controllable.
inline bool is_controllable(const LieClosure& closure) {
  return closure.dimension >= closure.dim * closure.dim - 1;
}

/// Reachable-set dimension D_W. For a controllable system this is N^2 for
/// density/unitary objects and N for pure states (the counting convention the
/// bound formulas use); a sub-controllable closure reports its own dimension
/// as the manifold-dimension estimate.
inline std::size_t reachable_dim(const LieClosure& closure, ObjectKind kind) {
  require(closure.converged, "reachable_dim: closure did not converge");
  if (!is_controllable(closure)) return closure.dimension;
  switch (kind) {
    case ObjectKind::pure: return closure.dim;
    case ObjectKind::density:
    case ObjectKind::unitary: return closure.dim * closure.dim;
  }
  return closure.dimension;
}

}  // namespace qoc
