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

#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "qoc/common.hpp"
#include "qoc/rng.hpp"

namespace qoc {

inline constexpr double two_pi = 6.283185307179586476925286766559;

enum class Envelope { none, sine_ramp };

inline const char* to_string(Envelope env) {
  return env == Envelope::none ? "none" : "sine-ramp";
}

inline Envelope envelope_from_string(const std::string& s) {
  if (s == "none") return Envelope::none;
  if (s == "sine-ramp") return Envelope::sine_ramp;
  throw std::invalid_argument("unknown envelope: " + s);
}

// Chopped randomized trigonometric basis on [0, T]. Mode frequencies are
// w_k = 2 pi k (1 + r_k) / T with r_k uniform in [-0.5, 0.5] drawn from the
// seed, the standard CRAB prescription; the jitter keeps the modes linearly
// independent on the finite horizon.
class CrabBasis {
 public:
  CrabBasis(std::size_t n_modes, double horizon, std::uint64_t seed,
            Envelope envelope = Envelope::none)
      : n_modes_(n_modes), horizon_(horizon), seed_(seed), envelope_(envelope) {
    require(std::isfinite(horizon_) && horizon_ > 0.0,
            "CrabBasis: horizon must be positive and finite");
    Rng rng(derive_seed(seed, 0x43524142));  // "CRAB" stream
    frequencies_.reserve(n_modes_);
    for (std::size_t k = 1; k <= n_modes_; ++k) {
      const double jitter = rng.uniform() - 0.5;
      frequencies_.push_back(two_pi * static_cast<double>(k) * (1.0 + jitter) / horizon_);
    }
  }

  std::size_t n_modes() const { return n_modes_; }
  double horizon() const { return horizon_; }
  std::uint64_t seed() const { return seed_; }
  Envelope envelope() const { return envelope_; }
  const std::vector<double>& frequencies() const { return frequencies_; }

  /// Declared bandwidth: the largest mode frequency in cycles per unit time,
  /// so that horizon * bandwidth is the sample count of the signal. Zero for
  /// a constant (mode-free) basis.
  double bandwidth() const {
    if (frequencies_.empty()) return 0.0;
    double max_omega = 0.0;
    for (double w : frequencies_) max_omega = std::max(max_omega, w);
    return max_omega / two_pi;
  }

  double envelope_at(double t) const {
    if (envelope_ == Envelope::none) return 1.0;
    return std::sin(two_pi * 0.5 * t / horizon_);  // sin(pi t / T)
  }

 private:
  std::size_t n_modes_;
  double horizon_;
  std::uint64_t seed_;
  Envelope envelope_;
  std::vector<double> frequencies_;
};

struct PulseInfoReport {
  double bandwidth = 0.0;        // cycles per unit time
  double bit_depth = 0.0;        // kappa_s, bits per sample
  double horizon = 0.0;          // T
  std::size_t sample_count = 0;  // n_s = ceil(T * bandwidth), at least 1
  double information_bits = 0.0; // b_gamma
  std::optional<double> snr;     // signal-to-noise power ratio, when modeled
};

// Band-limited, amplitude-bounded control field
//   gamma(t) = clamp(gamma0 + env(t) * sum_k a_k sin(w_k t) + b_k cos(w_k t))
// with quantization metadata. Values are hard-clamped into the admissible
// window rather than penalized, so the amplitude invariant holds literally.
class ControlPulse {
 public:
  ControlPulse(CrabBasis basis, std::vector<double> coefficients, double baseline,
               double gamma_min, double gamma_max, double quantization_step)
      : basis_(std::move(basis)),
        coefficients_(std::move(coefficients)),
        baseline_(baseline),
        gamma_min_(gamma_min),
        gamma_max_(gamma_max),
        quantization_step_(quantization_step) {
    require(coefficients_.size() == 2 * basis_.n_modes(),
            "ControlPulse: need 2 * n_modes coefficients (a_k, b_k pairs)");
    require(gamma_min_ < gamma_max_, "ControlPulse: empty amplitude window");
    require(baseline_ >= gamma_min_ && baseline_ <= gamma_max_,
            "ControlPulse: baseline outside the amplitude window");
    require(quantization_step_ > 0.0, "ControlPulse: quantization step must be positive");
    require(quantization_step_ <= gamma_max_ - gamma_min_,
            "ControlPulse: quantization step exceeds the amplitude window");
  }

  /// Window span / 2^52: one double mantissa of resolution, i.e. the bit
  /// depth of an unquantized machine-precision pulse.
  static double default_quantization_step(double gamma_min, double gamma_max) {
    return (gamma_max - gamma_min) * 0x1.0p-52;
  }

  static ControlPulse constant(double value, double horizon, double gamma_min,
                               double gamma_max) {
    return ControlPulse(CrabBasis(0, horizon, 0), {}, value, gamma_min, gamma_max,
                        default_quantization_step(gamma_min, gamma_max));
  }

  double evaluate(double t) const {
    const double T = basis_.horizon();
    if (!(t >= -1e-12 * T) || !(t <= T * (1.0 + 1e-12))) {
      throw std::domain_error("ControlPulse::evaluate: t outside [0, T]");
    }
    double value = 0.0;
    const auto& w = basis_.frequencies();
    for (std::size_t k = 0; k < w.size(); ++k) {
      value += coefficients_[2 * k] * std::sin(w[k] * t) +
               coefficients_[2 * k + 1] * std::cos(w[k] * t);
    }
    value = baseline_ + basis_.envelope_at(t) * value;
    return std::min(gamma_max_, std::max(gamma_min_, value));
  }

  /// n_s = T * bandwidth rounded up; a constant pulse counts as one sample.
  std::size_t sample_count() const {
    const double x = basis_.horizon() * basis_.bandwidth();
    // guard against 16.000000000000002-style roundoff before the ceil
    const auto n = static_cast<std::size_t>(std::ceil(x - 1e-9));
    return std::max<std::size_t>(1, n);
  }

  PulseInfoReport info_content(std::optional<double> snr = std::nullopt) const {
    PulseInfoReport report;
    report.bandwidth = basis_.bandwidth();
    report.horizon = basis_.horizon();
    report.sample_count = sample_count();
    report.bit_depth = std::log2(1.0 + (gamma_max_ - gamma_min_) / quantization_step_);
    report.snr = snr;
    const double per_sample_bits = snr ? std::log2(1.0 + *snr) : report.bit_depth;
    report.information_bits = report.horizon * report.bandwidth * per_sample_bits;
    return report;
  }

  ControlPulse with_coefficients(std::vector<double> coefficients) const {
    return ControlPulse(basis_, std::move(coefficients), baseline_, gamma_min_,
                        gamma_max_, quantization_step_);
  }

  ControlPulse with_baseline(double baseline) const {
    return ControlPulse(basis_, coefficients_, baseline, gamma_min_, gamma_max_,
                        quantization_step_);
  }

  const CrabBasis& basis() const { return basis_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double baseline() const { return baseline_; }
  double gamma_min() const { return gamma_min_; }
  double gamma_max() const { return gamma_max_; }
  double quantization_step() const { return quantization_step_; }
  double horizon() const { return basis_.horizon(); }

 private:
  CrabBasis basis_;
  std::vector<double> coefficients_;
  double baseline_;
  double gamma_min_;
  double gamma_max_;
  double quantization_step_;
};

/// Snaps each sample to the nearest level gamma_min + m * step inside the
/// window. gamma_max is always a level, so for in-window samples the snap
/// error never exceeds step / 2.
inline std::vector<double> quantize(const std::vector<double>& samples, double step,
                                    double gamma_min, double gamma_max) {
  require(!samples.empty(), "quantize: empty input");
  require(step > 0.0, "quantize: step must be positive");
  require(gamma_min < gamma_max, "quantize: empty window");
  const double span = gamma_max - gamma_min;
  const auto m_max = static_cast<long long>(std::floor(span / step + 1e-9));
  const double top_level = gamma_min + static_cast<double>(m_max) * step;

  std::vector<double> out;
  out.reserve(samples.size());
  for (double x : samples) {
    const double clamped = std::min(gamma_max, std::max(gamma_min, x));
    long long m = std::llround((clamped - gamma_min) / step);
    if (m < 0) m = 0;
    if (m > m_max) m = m_max;
    double level = gamma_min + static_cast<double>(m) * step;
    // the window edge is a valid level too
    if (std::abs(gamma_max - clamped) < std::abs(level - clamped)) {
      level = gamma_max;
    }
    out.push_back(level);
  }
  return out;
}

/// Adds i.i.d. zero-mean Gaussian noise with variance mean(x^2) / snr_power.
/// snr_power = +infinity is the noiseless sentinel. Deterministic per seed.
inline std::vector<double> add_gaussian_noise(const std::vector<double>& samples,
                                              double snr_power, std::uint64_t seed) {
  require(snr_power > 0.0, "add_gaussian_noise: snr must be positive");
  if (std::isinf(snr_power) || samples.empty()) return samples;
  double power = 0.0;
  for (double x : samples) power += x * x;
  power /= static_cast<double>(samples.size());
  const double sigma = std::sqrt(power / snr_power);
  Rng rng(derive_seed(seed, 0x4e4f495345));  // "NOISE" stream
  std::vector<double> out;
  out.reserve(samples.size());
  for (double x : samples) out.push_back(x + sigma * rng.normal());
  return out;
}

}  // namespace qoc
