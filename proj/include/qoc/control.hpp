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

#include <optional>

#include "qoc/dynamics.hpp"
#include "qoc/metrics.hpp"
#include "qoc/nelder_mead.hpp"
#include "qoc/parallel.hpp"

namespace qoc {

// One control task: drive `initial` to `goal` under H_D + gamma(t) H_C within
// horizon T, to objective value epsilon. For unitary goals the initial object
// is the identity. Immutable; build through the factories.
class ControlProblem {
 public:
  static ControlProblem pure(HamiltonianPair h, PureState initial, PureState goal,
                             double horizon, double epsilon, double lambda_power = 0.0) {
    require(initial.dim() == h.dim() && goal.dim() == h.dim(),
            "ControlProblem: state dimension does not match Hamiltonian");
    ControlProblem p(std::move(h), ObjectKind::pure, horizon, epsilon, lambda_power);
    p.initial_pure_ = std::move(initial);
    p.goal_pure_ = std::move(goal);
    return p;
  }

  static ControlProblem density(HamiltonianPair h, DensityMatrix initial,
                                DensityMatrix goal, double horizon, double epsilon,
                                double lambda_power = 0.0) {
    require(initial.dim() == h.dim() && goal.dim() == h.dim(),
            "ControlProblem: state dimension does not match Hamiltonian");
    ControlProblem p(std::move(h), ObjectKind::density, horizon, epsilon, lambda_power);
    p.initial_density_ = std::move(initial);
    p.goal_density_ = std::move(goal);
    return p;
  }

  static ControlProblem unitary(HamiltonianPair h, ComplexMatrix goal, double horizon,
                                double epsilon, double lambda_power = 0.0) {
    require(goal.rows() == goal.cols() &&
                static_cast<std::size_t>(goal.rows()) == h.dim(),
            "ControlProblem: goal dimension does not match Hamiltonian");
    const double defect = unitarity_defect(goal);
    if (defect > unitary_tol) {
      throw std::invalid_argument("ControlProblem: goal not unitary, defect " +
                                  std::to_string(defect));
    }
    ControlProblem p(std::move(h), ObjectKind::unitary, horizon, epsilon, lambda_power);
    p.goal_unitary_ = std::move(goal);
    return p;
  }

  ObjectKind kind() const { return kind_; }
  const HamiltonianPair& h() const { return h_; }
  double horizon() const { return horizon_; }
  double epsilon() const { return epsilon_; }
  double lambda_power() const { return lambda_power_; }

  const PureState& initial_pure() const { return initial_pure_.value(); }
  const PureState& goal_pure() const { return goal_pure_.value(); }
  const DensityMatrix& initial_density() const { return initial_density_.value(); }
  const DensityMatrix& goal_density() const { return goal_density_.value(); }
  const ComplexMatrix& goal_unitary() const { return goal_unitary_.value(); }

 private:
  ControlProblem(HamiltonianPair h, ObjectKind kind, double horizon, double epsilon,
                 double lambda_power)
      : h_(std::move(h)),
        kind_(kind),
        horizon_(horizon),
        epsilon_(epsilon),
        lambda_power_(lambda_power) {
    require(std::isfinite(horizon_) && horizon_ > 0.0,
            "ControlProblem: horizon must be positive and finite");
    require(epsilon_ > 0.0 && epsilon_ < 1.0, "ControlProblem: epsilon must be in (0,1)");
    require(lambda_power_ >= 0.0, "ControlProblem: lambda weight must be non-negative");
  }

  HamiltonianPair h_;
  ObjectKind kind_;
  double horizon_;
  double epsilon_;
  double lambda_power_;
  std::optional<PureState> initial_pure_, goal_pure_;
  std::optional<DensityMatrix> initial_density_, goal_density_;
  std::optional<ComplexMatrix> goal_unitary_;
};

/// The minimized functional: final-object distance to the goal (infidelity for
/// pure/unitary goals, trace distance for density goals), plus the optional
/// lambda-weighted mean pulse power penalty.
inline double objective(const ControlProblem& problem, const ControlPulse& pulse,
                        const PropagationConfig& cfg) {
  const std::vector<double> samples = sample_pulse(pulse, cfg);
  double value = 0.0;
  switch (problem.kind()) {
    case ObjectKind::pure: {
      const PureState final_state =
          propagate_pure_samples(problem.h(), problem.initial_pure(), samples, cfg.total_time);
      value = 1.0 - fidelity_pure(final_state, problem.goal_pure());
      break;
    }
    case ObjectKind::density: {
      const DensityMatrix final_state = propagate_density_samples(
          problem.h(), problem.initial_density(), samples, cfg.total_time);
      value = trace_distance(final_state, problem.goal_density());
      break;
    }
    case ObjectKind::unitary: {
      const ComplexMatrix u = propagate_unitary_samples(problem.h(), samples, cfg.total_time);
      value = gate_infidelity(u, problem.goal_unitary());
      break;
    }
  }
  if (problem.lambda_power() > 0.0) {
    double power = 0.0;
    for (double g : samples) power += g * g;
    value += problem.lambda_power() * power / static_cast<double>(samples.size());
  }
  return value;
}

struct PulseShape {
  double baseline = 0.0;
  double gamma_min = -1.0;
  double gamma_max = 1.0;
  // <= 0 means machine-precision resolution (unquantized)
  double quantization_step = 0.0;

  double step_or_default() const {
    return quantization_step > 0.0
               ? quantization_step
               : ControlPulse::default_quantization_step(gamma_min, gamma_max);
  }
};

struct OptimizeSettings {
  std::size_t restarts = 1;
  std::size_t budget_per_restart = 2000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  // Number of leading CRAB coefficients that are free (rest pinned to zero);
  // defaults to all 2 * n_modes. Zero coefficients with a mode-free basis
  // means the baseline itself is the single search variable.
  std::optional<std::size_t> free_coefficients;
  double simplex_scale = 0.0;   // <= 0: 0.1 * (gamma_max - gamma_min)
  double start_amplitude = 0.0; // <= 0: 0.25 * (gamma_max - gamma_min)
  double ftol = 1e-12;
};

struct OptimizationOutcome {
  OptimizationResult result;   // merged over restarts; history is the winner's
  ControlPulse best_pulse;
  std::size_t winning_restart = 0;
};

namespace detail {

inline ControlPulse pulse_from_free_coefficients(const CrabBasis& basis,
                                                 const PulseShape& shape,
                                                 const std::vector<double>& x,
                                                 std::size_t n_free) {
  if (basis.n_modes() == 0) {
    // baseline-only search: x = {gamma0}
    return ControlPulse(basis, {}, std::min(shape.gamma_max, std::max(shape.gamma_min, x[0])),
                        shape.gamma_min, shape.gamma_max, shape.step_or_default());
  }
  std::vector<double> coeffs(2 * basis.n_modes(), 0.0);
  for (std::size_t i = 0; i < n_free; ++i) coeffs[i] = x[i];
  return ControlPulse(basis, std::move(coeffs), shape.baseline, shape.gamma_min,
                      shape.gamma_max, shape.step_or_default());
}

}  // namespace detail

/// CRAB optimization: seeded multistart Nelder-Mead over the basis
/// coefficients. Each restart redraws the frequency jitter (restart 0 keeps
/// the caller's basis) and its own starting point (restart 0 starts from zero
/// coefficients). Fully deterministic for a fixed (problem, basis seed,
/// settings seed, restarts, budget), independent of the worker count.
inline OptimizationOutcome optimize(const ControlProblem& problem, const CrabBasis& basis,
                                    const PulseShape& shape, const PropagationConfig& cfg,
                                    const OptimizeSettings& settings) {
  require(std::abs(basis.horizon() - problem.horizon()) <=
              1e-12 * std::max(1.0, problem.horizon()),
          "optimize: basis horizon does not match problem horizon");
  require(settings.restarts >= 1, "optimize: need at least one restart");
  const std::size_t n_coeffs = 2 * basis.n_modes();
  const std::size_t n_free = settings.free_coefficients.value_or(n_coeffs);
  require(n_free <= n_coeffs, "optimize: more free coefficients than the basis has");
  const std::size_t dim = std::max<std::size_t>(1, basis.n_modes() == 0 ? 1 : n_free);
  require(basis.n_modes() == 0 || n_free >= 1,
          "optimize: no free coefficients; use a mode-free basis for baseline-only search");

  const double span = shape.gamma_max - shape.gamma_min;
  const double scale = settings.simplex_scale > 0.0 ? settings.simplex_scale : 0.1 * span;
  const double start_amp =
      settings.start_amplitude > 0.0 ? settings.start_amplitude : 0.25 * span;

  struct RestartOutcome {
    OptimizationResult result;
    std::uint64_t basis_seed = 0;
  };
  std::vector<RestartOutcome> outcomes(settings.restarts);

  parallel_for(settings.restarts, settings.workers, [&](std::size_t r) {
    const std::uint64_t basis_seed =
        r == 0 ? basis.seed() : derive_seed(basis.seed(), r);
    const CrabBasis restart_basis =
        r == 0 ? basis
               : CrabBasis(basis.n_modes(), basis.horizon(), basis_seed, basis.envelope());

    std::vector<double> x0(dim, 0.0);
    if (basis.n_modes() == 0) x0[0] = shape.baseline;
    if (r > 0) {
      Rng rng(derive_seed(settings.seed, 0x5354415254 + r));  // "START" stream
      for (double& xi : x0) xi = rng.uniform(-start_amp, start_amp);
      if (basis.n_modes() == 0) {
        x0[0] = rng.uniform(shape.gamma_min, shape.gamma_max);
      }
    }

    const ObjectiveFn fn = [&](const std::vector<double>& x) {
      return objective(problem,
                       detail::pulse_from_free_coefficients(restart_basis, shape, x, n_free),
                       cfg);
    };
    RestartOutcome out;
    out.basis_seed = basis_seed;
    out.result = nelder_mead(fn, std::move(x0), scale, settings.budget_per_restart,
                             settings.ftol, derive_seed(settings.seed, 1000 + r),
                             problem.epsilon());
    outcomes[r] = std::move(out);
  });

  std::size_t winner = 0;
  std::size_t total_evaluations = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    total_evaluations += outcomes[r].result.evaluations;
    if (outcomes[r].result.best_objective < outcomes[winner].result.best_objective) {
      winner = r;
    }
  }

  const CrabBasis winners_basis =
      winner == 0 ? basis
                  : CrabBasis(basis.n_modes(), basis.horizon(),
                              outcomes[winner].basis_seed, basis.envelope());
  OptimizationOutcome outcome{
      outcomes[winner].result,
      detail::pulse_from_free_coefficients(winners_basis, shape,
                                           outcomes[winner].result.best_coefficients,
                                           n_free),
      winner};
  outcome.result.evaluations = total_evaluations;
  outcome.result.converged = outcome.result.best_objective <= problem.epsilon();
  outcome.result.seed = settings.seed;
  return outcome;
}

}  // namespace qoc
