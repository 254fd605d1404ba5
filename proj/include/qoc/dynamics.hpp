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

#include "qoc/pulse.hpp"
#include "qoc/states.hpp"

namespace qoc {

enum class SamplingRule { left_point, midpoint };

inline const char* to_string(SamplingRule rule) {
  return rule == SamplingRule::left_point ? "left-point" : "midpoint";
}

inline SamplingRule sampling_rule_from_string(const std::string& s) {
  if (s == "left-point") return SamplingRule::left_point;
  if (s == "midpoint") return SamplingRule::midpoint;
  throw std::invalid_argument("unknown sampling rule: " + s);
}

// Time grid for the piecewise-constant exponential integrator. Each of the
// pulse's n_s information samples is subdivided into segments_per_sample
// integrator segments; the field is held constant per segment at the
// left-point or midpoint value. Midpoint is the default: second order at no
// extra matrix cost.
struct PropagationConfig {
  double total_time = 1.0;
  std::size_t segments_per_sample = 32;
  SamplingRule sampling = SamplingRule::midpoint;

  void validate() const {
    require(std::isfinite(total_time) && total_time > 0.0,
            "PropagationConfig: total time must be positive and finite");
    require(segments_per_sample >= 1 && segments_per_sample <= 1000000,
            "PropagationConfig: segments_per_sample must be in [1, 1e6]");
  }
};

namespace detail {
inline void check_pulse_matches(const ControlPulse& pulse, const PropagationConfig& cfg) {
  cfg.validate();
  const double T = cfg.total_time;
  if (std::abs(pulse.horizon() - T) > 1e-12 * std::max(1.0, T)) {
    throw std::invalid_argument("propagate: pulse horizon does not match total time");
  }
}
}  // namespace detail

inline std::size_t segment_count(const ControlPulse& pulse, const PropagationConfig& cfg) {
  return pulse.sample_count() * cfg.segments_per_sample;
}

/// Field values on the integrator grid, one per segment.
inline std::vector<double> sample_pulse(const ControlPulse& pulse,
                                        const PropagationConfig& cfg) {
  detail::check_pulse_matches(pulse, cfg);
  const std::size_t n_seg = segment_count(pulse, cfg);
  const double dt = cfg.total_time / static_cast<double>(n_seg);
  const double offset = cfg.sampling == SamplingRule::midpoint ? 0.5 : 0.0;
  std::vector<double> values;
  values.reserve(n_seg);
  for (std::size_t k = 0; k < n_seg; ++k) {
    values.push_back(pulse.evaluate((static_cast<double>(k) + offset) * dt));
  }
  return values;
}

/// U = prod_k exp(-i dt (H_D + gamma_k H_C)), ordered right-to-left in time.
/// Exact per segment, so the product is unitary to machine precision.
inline ComplexMatrix propagate_unitary_samples(const HamiltonianPair& h,
                                               const std::vector<double>& gamma_values,
                                               double total_time) {
  require(!gamma_values.empty(), "propagate: empty sample vector");
  require(std::isfinite(total_time) && total_time > 0.0,
          "propagate: total time must be positive and finite");
  const double dt = total_time / static_cast<double>(gamma_values.size());
  const auto n = static_cast<Eigen::Index>(h.dim());
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (double gamma : gamma_values) {
    u = expm_hermitian_scaled(h.at(gamma), dt) * u;
  }
  return u;
}

inline ComplexMatrix propagate_unitary(const HamiltonianPair& h, const ControlPulse& pulse,
                                       const PropagationConfig& cfg) {
  return propagate_unitary_samples(h, sample_pulse(pulse, cfg), cfg.total_time);
}

inline PureState propagate_pure_samples(const HamiltonianPair& h, const PureState& psi0,
                                        const std::vector<double>& gamma_values,
                                        double total_time) {
  require(psi0.dim() == h.dim(), "propagate_pure: state/Hamiltonian dimension mismatch");
  require(!gamma_values.empty(), "propagate: empty sample vector");
  const double dt = total_time / static_cast<double>(gamma_values.size());
  ComplexVector psi = psi0.amplitudes();
  for (double gamma : gamma_values) {
    psi = expm_hermitian_scaled(h.at(gamma), dt) * psi;
  }
  return PureState::normalized(std::move(psi));
}

inline PureState propagate_pure(const HamiltonianPair& h, const PureState& psi0,
                                const ControlPulse& pulse, const PropagationConfig& cfg) {
  return propagate_pure_samples(h, psi0, sample_pulse(pulse, cfg), cfg.total_time);
}

inline DensityMatrix propagate_density_samples(const HamiltonianPair& h,
                                               const DensityMatrix& rho0,
                                               const std::vector<double>& gamma_values,
                                               double total_time) {
  require(rho0.dim() == h.dim(), "propagate_density: dimension mismatch");
  const ComplexMatrix u = propagate_unitary_samples(h, gamma_values, total_time);
  ComplexMatrix rho = u * rho0.matrix() * u.adjoint();
  // scrub the roundoff so the result re-validates cleanly
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix propagate_density(const HamiltonianPair& h, const DensityMatrix& rho0,
                                       const ControlPulse& pulse,
                                       const PropagationConfig& cfg) {
  return propagate_density_samples(h, rho0, sample_pulse(pulse, cfg), cfg.total_time);
}

}  // namespace qoc
