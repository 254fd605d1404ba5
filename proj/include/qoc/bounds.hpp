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

#include "qoc/control.hpp"
#include "qoc/lie.hpp"

namespace qoc {

// All information quantities below are in bits: every logarithm is base 2,
// including the Shannon-Hartley forms.

/// Precision floor from the pulse information content:
/// epsilon >= 2^(-T * bandwidth * bit_depth / d_w).
inline double epsilon_info_bound(double horizon, double bandwidth, double bit_depth,
                                 std::size_t d_w) {
  require(horizon > 0.0 && std::isfinite(horizon), "epsilon_info_bound: T must be positive");
  require(bandwidth > 0.0, "epsilon_info_bound: bandwidth must be positive");
  require(bit_depth >= 0.0, "epsilon_info_bound: bit depth must be non-negative");
  require(d_w >= 1, "epsilon_info_bound: reachable-set dimension must be >= 1");
  return std::exp2(-(horizon * bandwidth * bit_depth) / static_cast<double>(d_w));
}

/// Same floor expressed through the integer sample count n_s = ceil(T * bandwidth).
/// This is the form used for auditing sweep records.
inline double epsilon_info_bound_sampled(std::size_t n_s, double bit_depth,
                                         std::size_t d_w) {
  require(n_s >= 1, "epsilon_info_bound_sampled: need at least one sample");
  require(bit_depth >= 0.0, "epsilon_info_bound_sampled: bit depth must be non-negative");
  require(d_w >= 1, "epsilon_info_bound_sampled: reachable-set dimension must be >= 1");
  return std::exp2(-(static_cast<double>(n_s) * bit_depth) / static_cast<double>(d_w));
}

/// Minimal number of pulse samples able to specify any goal: n_s >= d_w.
inline std::size_t ns_lower_bound(std::size_t d_w) {
  require(d_w >= 1, "ns_lower_bound: reachable-set dimension must be >= 1");
  return d_w;
}

/// Minimal process time at finite bandwidth: T >= d_w / bandwidth
/// (the continuous analog of gate-count compilation bounds).
inline double time_lower_bound(std::size_t d_w, double bandwidth) {
  require(d_w >= 1, "time_lower_bound: reachable-set dimension must be >= 1");
  require(bandwidth > 0.0, "time_lower_bound: bandwidth must be positive");
  return static_cast<double>(d_w) / bandwidth;
}

/// Precision-resolved form: T >= d_w / (bandwidth * bit_depth) * log2(1/epsilon).
inline double time_lower_bound(std::size_t d_w, double bandwidth, double bit_depth,
                               double epsilon) {
  require(d_w >= 1, "time_lower_bound: reachable-set dimension must be >= 1");
  require(bandwidth > 0.0, "time_lower_bound: bandwidth must be positive");
  require(bit_depth > 0.0, "time_lower_bound: bit depth must be positive");
  require(epsilon > 0.0 && epsilon <= 1.0, "time_lower_bound: epsilon must be in (0,1]");
  return static_cast<double>(d_w) / (bandwidth * bit_depth) * std::log2(1.0 / epsilon);
}

/// Quantum speed limit T >= d(initial, goal) / lambda_bar with the Bures
/// angle as the pure-state distance.
inline double qsl_time(const PureState& initial, const PureState& goal,
                       double lambda_bar) {
  require(lambda_bar > 0.0, "qsl_time: lambda_bar must be positive");
  return bures_angle(initial, goal) / lambda_bar;
}

/// Mixed-state variant, with the trace distance.
inline double qsl_time(const DensityMatrix& initial, const DensityMatrix& goal,
                       double lambda_bar) {
  require(lambda_bar > 0.0, "qsl_time: lambda_bar must be positive");
  return trace_distance(initial, goal) / lambda_bar;
}

/// Time-averaged spectral norm of H(t) along the pulse, sampled on the
/// propagation grid; the default generator strength for the QSL.
inline double time_averaged_generator_norm(const HamiltonianPair& h,
                                           const ControlPulse& pulse,
                                           const PropagationConfig& cfg) {
  const std::vector<double> samples = sample_pulse(pulse, cfg);
  double acc = 0.0;
  for (double gamma : samples) acc += operator_norm_hermitian(h.at(gamma));
  return acc / static_cast<double>(samples.size());
}

/// Worst-case generator strength ||H_D|| + max(|gamma_min|, |gamma_max|) ||H_C||;
/// the default path velocity v_max under the bounded-amplitude constraint.
inline double max_generator_norm(const HamiltonianPair& h, double gamma_min,
                                 double gamma_max) {
  require(gamma_min < gamma_max, "max_generator_norm: empty amplitude window");
  const double gmax = std::max(std::abs(gamma_min), std::abs(gamma_max));
  return operator_norm_hermitian(h.drift()) + gmax * operator_norm_hermitian(h.control());
}

/// Noisy-channel precision floor: epsilon >= (1 + S/N)^(-n_s / d_w).
/// Evaluated as exp2(-(n_s/d_w) * log2(1 + snr)) so that it matches the
/// Hartley form exactly when log2(1 + snr) equals the bit depth.
inline double epsilon_noise_bound(std::size_t n_s, std::size_t d_w, double snr_power) {
  require(n_s >= 1, "epsilon_noise_bound: need at least one sample");
  require(d_w >= 1, "epsilon_noise_bound: reachable-set dimension must be >= 1");
  require(snr_power > 0.0, "epsilon_noise_bound: snr must be positive");
  return std::exp2(-(static_cast<double>(n_s) / static_cast<double>(d_w)) *
                   std::log2(1.0 + snr_power));
}

/// Minimal time under Gaussian white noise:
/// T >= d_w / bandwidth * log2(1/epsilon) / log2(1 + S/N).
inline double time_noise_bound(std::size_t d_w, double bandwidth, double epsilon,
                               double snr_power) {
  require(d_w >= 1, "time_noise_bound: reachable-set dimension must be >= 1");
  require(bandwidth > 0.0, "time_noise_bound: bandwidth must be positive");
  require(epsilon > 0.0 && epsilon <= 1.0, "time_noise_bound: epsilon must be in (0,1]");
  require(snr_power > 0.0, "time_noise_bound: snr must be positive");
  return static_cast<double>(d_w) / bandwidth * std::log2(1.0 / epsilon) /
         std::log2(1.0 + snr_power);
}

/// Path-covering information ceiling, with Poly(D) instantiated as D^degree:
/// (D^degree * v_max / epsilon) * D * log2(1/epsilon) bits. Reported for
/// context only, never enforced; diverges as epsilon -> 0. The horizon enters
/// the derivation through the path length (L <= T v_max) and is validated
/// here but replaced by the polynomial instantiation in the arithmetic.
inline double upper_bound_info(std::size_t d_w, double epsilon, double v_max,
                               std::size_t poly_degree, double horizon) {
  require(d_w >= 1, "upper_bound_info: reachable-set dimension must be >= 1");
  require(epsilon > 0.0 && epsilon < 1.0, "upper_bound_info: epsilon must be in (0,1)");
  require(v_max > 0.0, "upper_bound_info: v_max must be positive");
  require(horizon > 0.0, "upper_bound_info: horizon must be positive");
  const double d = static_cast<double>(d_w);
  const double n_balls = std::pow(d, static_cast<double>(poly_degree)) * v_max / epsilon;
  return n_balls * d * std::log2(1.0 / epsilon);
}

// Every closed-form bound evaluated for one problem/pulse configuration.
struct BoundsReport {
  std::size_t d_w = 0;
  std::size_t n_s = 0;
  double bit_depth = 0.0;    // kappa_s
  double bandwidth = 0.0;    // delta Omega, cycles per unit time
  double horizon = 0.0;      // T
  double eps_info = 0.0;     // information precision floor
  std::size_t n_s_min = 0;   // sample-count floor
  double t_min = 0.0;        // bandwidth time floor
  double t_qsl = 0.0;        // quantum speed limit
  std::optional<double> eps_noise;
  std::optional<double> t_min_noise;
};

namespace detail {
/// Bures-angle analog between the identity and a target unitary,
/// arccos(|Tr V| / N); the distance entering the QSL for gate problems.
inline double unitary_goal_angle(const ComplexMatrix& v) {
  const double n = static_cast<double>(v.rows());
  const double overlap = std::min(1.0, std::abs(v.trace()) / n);
  return std::acos(overlap);
}
}  // namespace detail

/// Assembles the full report. d_w follows the closure and the problem's
/// object kind; lambda_bar for the QSL is the time-averaged generator norm
/// along the supplied pulse.
inline BoundsReport compute_bounds(const ControlProblem& problem, const ControlPulse& pulse,
                                   const PropagationConfig& cfg, const LieClosure& closure,
                                   std::optional<double> snr_power = std::nullopt) {
  require(closure.dim == problem.h().dim(), "compute_bounds: closure dimension mismatch");
  const PulseInfoReport info = pulse.info_content(snr_power);
  require(info.bandwidth > 0.0, "compute_bounds: pulse has zero bandwidth");

  BoundsReport report;
  report.d_w = reachable_dim(closure, problem.kind());
  report.n_s = info.sample_count;
  report.bit_depth = info.bit_depth;
  report.bandwidth = info.bandwidth;
  report.horizon = info.horizon;
  report.eps_info = epsilon_info_bound(info.horizon, info.bandwidth, info.bit_depth,
                                       report.d_w);
  report.n_s_min = ns_lower_bound(report.d_w);
  report.t_min = time_lower_bound(report.d_w, info.bandwidth);

  const double lambda_bar = time_averaged_generator_norm(problem.h(), pulse, cfg);
  if (lambda_bar > 0.0) {
    switch (problem.kind()) {
      case ObjectKind::pure:
        report.t_qsl = qsl_time(problem.initial_pure(), problem.goal_pure(), lambda_bar);
        break;
      case ObjectKind::density:
        report.t_qsl =
            qsl_time(problem.initial_density(), problem.goal_density(), lambda_bar);
        break;
      case ObjectKind::unitary:
        report.t_qsl = detail::unitary_goal_angle(problem.goal_unitary()) / lambda_bar;
        break;
    }
  }

  if (snr_power) {
    report.eps_noise = epsilon_noise_bound(report.n_s, report.d_w, *snr_power);
    report.t_min_noise =
        time_noise_bound(report.d_w, info.bandwidth, problem.epsilon(), *snr_power);
  }
  return report;
}

}  // namespace qoc
