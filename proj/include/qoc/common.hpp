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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qoc {

// Fixed numerical tolerances, surfaced in error diagnostics. Structural
// checks (hermiticity, trace, state norm) use structural_tol; validation of
// user-supplied unitaries uses unitary_tol.
inline constexpr double structural_tol = 1e-10;
inline constexpr double unitary_tol = 1e-8;

// Dense matrices only. Dimensions beyond this are rejected with a clear
// error instead of silently thrashing memory.
inline constexpr std::size_t max_dimension = 1024;

enum class ObjectKind { pure, density, unitary };

inline const char* to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::pure: return "pure";
    case ObjectKind::density: return "density";
    case ObjectKind::unitary: return "unitary";
  }
  return "unknown";
}

inline ObjectKind object_kind_from_string(const std::string& s) {
  if (s == "pure") return ObjectKind::pure;
  if (s == "density") return ObjectKind::density;
  if (s == "unitary") return ObjectKind::unitary;
  throw std::invalid_argument("unknown object kind: " + s);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

inline void check_dimension(std::size_t dim) {
  require(dim >= 1, "dimension must be at least 1");
  require(dim <= max_dimension,
          "dimension " + std::to_string(dim) + " exceeds the dense-storage cap of " +
              std::to_string(max_dimension));
}

}  // namespace qoc
