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
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "qoc/common.hpp"
#include "qoc/rng.hpp"

namespace qoc {

struct OptimizationResult {
  std::vector<double> best_coefficients;
  double best_objective = std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  bool converged = false;
  // (evaluation index, objective) recorded at every improvement of the
  // running best; its running minimum is non-increasing by construction.
  std::vector<std::pair<std::size_t, double>> history;
  std::uint64_t seed = 0;
};

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

namespace detail {

inline std::string format_point(const std::vector<double>& x) {
  std::ostringstream oss;
  oss << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) oss << ", ";
    oss << x[i];
  }
  oss << ")";
  return oss.str();
}

}  // namespace detail

// Nelder-Mead direct search with the standard reflection/expansion/
// contraction/shrink coefficients (1, 2, 0.5, 0.5). Deterministic per seed:
// the initial simplex is x0 plus one vertex per axis displaced by
// scale * (1 +/- 10% seeded jitter), and simplex ordering breaks objective
// ties by insertion index. Terminates when the objective spread across the
// simplex drops below ftol, the budget is exhausted, or the running best
// reaches stop_objective.
inline OptimizationResult nelder_mead(
    const ObjectiveFn& f, std::vector<double> x0, double scale, std::size_t budget,
    double ftol, std::uint64_t seed,
    double stop_objective = -std::numeric_limits<double>::infinity()) {
  const std::size_t d = x0.size();
  require(d >= 1, "nelder_mead: need at least one dimension");
  require(budget >= d + 1, "nelder_mead: budget must cover the initial simplex");
  require(scale > 0.0 && std::isfinite(scale), "nelder_mead: scale must be positive");
  require(ftol >= 0.0, "nelder_mead: ftol must be non-negative");

  OptimizationResult result;
  result.seed = seed;

  struct Vertex {
    std::vector<double> x;
    double f = 0.0;
    std::size_t order = 0;  // insertion index for deterministic tie-breaking
  };

  std::size_t evaluations = 0;
  std::size_t next_order = 0;
  bool stop_hit = false;

  auto evaluate = [&](const std::vector<double>& x) {
    const double fx = f(x);
    ++evaluations;
    if (!std::isfinite(fx)) {
      throw std::runtime_error("nelder_mead: non-finite objective at " +
                               detail::format_point(x));
    }
    if (fx < result.best_objective) {
      result.best_objective = fx;
      result.best_coefficients = x;
      result.history.emplace_back(evaluations, fx);
      if (fx <= stop_objective) stop_hit = true;
    }
    return fx;
  };

  Rng rng(derive_seed(seed, 0x53494d504c4558));  // "SIMPLEX" stream

  std::vector<Vertex> simplex;
  simplex.reserve(d + 1);
  simplex.push_back({x0, evaluate(x0), next_order++});
  for (std::size_t i = 0; i < d && !stop_hit; ++i) {
    std::vector<double> v = x0;
    const double jitter = 0.1 * (2.0 * rng.uniform() - 1.0);
    v[i] += scale * (1.0 + jitter);
    simplex.push_back({v, evaluate(v), next_order++});
  }

  auto order_simplex = [&]() {
    std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) {
      if (a.f != b.f) return a.f < b.f;
      return a.order < b.order;
    });
  };

  while (!stop_hit && simplex.size() == d + 1) {
    order_simplex();
    const double spread = simplex.back().f - simplex.front().f;
    if (spread < ftol) {
      result.converged = true;
      break;
    }
    if (evaluations >= budget) break;

    // centroid of all vertices but the worst
    std::vector<double> centroid(d, 0.0);
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[v].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    auto blend = [&](double coeff) {
      std::vector<double> p(d);
      for (std::size_t i = 0; i < d; ++i) {
        p[i] = centroid[i] + coeff * (simplex.back().x[i] - centroid[i]);
      }
      return p;
    };

    const std::vector<double> reflected = blend(-1.0);
    const double f_reflected = evaluate(reflected);
    if (stop_hit) break;

    if (f_reflected < simplex.front().f) {
      if (evaluations >= budget) {
        simplex.back() = {reflected, f_reflected, next_order++};
        break;
      }
      const std::vector<double> expanded = blend(-2.0);
      const double f_expanded = evaluate(expanded);
      simplex.back() = f_expanded < f_reflected
                           ? Vertex{expanded, f_expanded, next_order++}
                           : Vertex{reflected, f_reflected, next_order++};
      continue;
    }
    if (f_reflected < simplex[d - 1].f) {
      simplex.back() = {reflected, f_reflected, next_order++};
      continue;
    }
    if (evaluations >= budget) break;

    // contraction: outside if the reflection improved on the worst vertex
    const bool outside = f_reflected < simplex.back().f;
    const std::vector<double> contracted = blend(outside ? -0.5 : 0.5);
    const double f_contracted = evaluate(contracted);
    const double f_ref_or_worst = outside ? f_reflected : simplex.back().f;
    if (!stop_hit && f_contracted <= f_ref_or_worst) {
      simplex.back() = {contracted, f_contracted, next_order++};
      continue;
    }
    if (stop_hit) break;

    // shrink toward the best vertex
    for (std::size_t v = 1; v <= d; ++v) {
      if (evaluations >= budget || stop_hit) break;
      for (std::size_t i = 0; i < d; ++i) {
        simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
      }
      simplex[v].f = evaluate(simplex[v].x);
      simplex[v].order = next_order++;
    }
    if (evaluations >= budget) break;
  }

  if (stop_hit) result.converged = true;
  result.evaluations = evaluations;
  return result;
}

}  // namespace qoc
