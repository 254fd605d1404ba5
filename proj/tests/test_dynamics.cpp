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

#include <catch2/catch_amalgamated.hpp>

#include "qoc/dynamics.hpp"
#include "qoc/metrics.hpp"
#include "qoc/operators.hpp"
#include "support/test_support.hpp"

using namespace qoc;

namespace {

const double pi = std::acos(-1.0);

ControlPulse smooth_test_pulse(double T, std::uint64_t seed, double amplitude) {
  const CrabBasis basis(2, T, seed);
  // wide window so the clamp never kicks in and the field stays smooth
  return ControlPulse(basis, {amplitude, -0.4 * amplitude, 0.3 * amplitude, 0.2 * amplitude},
                      0.0, -50.0, 50.0, ControlPulse::default_quantization_step(-50.0, 50.0));
}

}  // namespace

TEST_CASE("free evolution under sigma_z for a full period is the identity") {
  const HamiltonianPair h(pauli_z(), pauli_x());
  const PropagationConfig cfg{2.0 * pi, 8, SamplingRule::midpoint};
  const ControlPulse off = ControlPulse::constant(0.0, 2.0 * pi, -1.0, 1.0);
  const ComplexMatrix u = propagate_unitary(h, off, cfg);
  REQUIRE(gate_infidelity(u, identity(2)) < 1e-9);
}

TEST_CASE("a resonant constant drive implements the analytic pi pulse") {
  const HamiltonianPair h(ComplexMatrix::Zero(2, 2), pauli_x());
  const PropagationConfig cfg{pi / 2.0, 4, SamplingRule::midpoint};
  const ControlPulse on = ControlPulse::constant(1.0, pi / 2.0, -1.0, 1.0);
  const PureState out = propagate_pure(h, PureState::basis_state(2, 0), on, cfg);
  REQUIRE(fidelity_pure(out, PureState::basis_state(2, 1)) > 1.0 - 1e-9);

  const DensityMatrix rho_out = propagate_density(
      h, DensityMatrix::pure(PureState::basis_state(2, 0)), on, cfg);
  REQUIRE(trace_distance(rho_out, DensityMatrix::pure(PureState::basis_state(2, 1))) < 1e-9);
}

TEST_CASE("an eigenstate of the drift only acquires phase") {
  const HamiltonianPair h(pauli_z(), pauli_x());
  const PropagationConfig cfg{1.7, 8, SamplingRule::midpoint};
  const ControlPulse off = ControlPulse::constant(0.0, 1.7, -1.0, 1.0);
  const PureState out = propagate_pure(h, PureState::basis_state(2, 0), off, cfg);
  REQUIRE(fidelity_pure(out, PureState::basis_state(2, 0)) > 1.0 - 1e-12);
}

TEST_CASE("coarse propagation of a smooth pulse matches a much finer grid") {
  const double T = 4.0;
  const HamiltonianPair h(pauli_z(), pauli_x());
  const ControlPulse pulse = smooth_test_pulse(T, 29, 0.5);
  const ComplexMatrix coarse =
      propagate_unitary(h, pulse, {T, 16, SamplingRule::midpoint});
  const ComplexMatrix fine =
      propagate_unitary(h, pulse, {T, 160, SamplingRule::midpoint});
  REQUIRE((coarse - fine).norm() < 1e-6);
}

TEST_CASE("propagators agree with applying the unitary to the state") {
  Rng rng(55);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::size_t dim = 4;
    const HamiltonianPair h(random_hermitian(dim, rng), random_hermitian(dim, rng));
    const double T = 2.0;
    const CrabBasis basis(3, T, seed);
    const ControlPulse pulse(basis, {0.4, -0.2, 0.3, 0.1, -0.5, 0.2}, 0.0, -1.0, 1.0,
                             ControlPulse::default_quantization_step(-1.0, 1.0));
    const PropagationConfig cfg{T, 8, SamplingRule::midpoint};
    const PureState psi0 = haar_random_state(dim, 900 + seed);

    const ComplexMatrix u = propagate_unitary(h, pulse, cfg);
    const PureState via_state = propagate_pure(h, psi0, pulse, cfg);
    const ComplexVector via_matrix = u * psi0.amplitudes();
    REQUIRE((via_state.amplitudes() - via_matrix).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("returned propagators are unitary for random instances") {
  Rng rng(91);
  for (int round = 0; round < 10; ++round) {
    const std::size_t dim = round % 2 == 0 ? 2 : 8;
    const HamiltonianPair h(random_hermitian(dim, rng), random_hermitian(dim, rng));
    const double T = 1.0 + 0.3 * round;
    const CrabBasis basis(2, T, static_cast<std::uint64_t>(round));
    const ControlPulse pulse(basis, {0.8, -0.1, 0.2, 0.5}, 0.1, -1.0, 1.0,
                             ControlPulse::default_quantization_step(-1.0, 1.0));
    const ComplexMatrix u = propagate_unitary(h, pulse, {T, 8, SamplingRule::midpoint});
    REQUIRE(unitarity_defect(u) < 1e-9);
  }
}

TEST_CASE("the maximally mixed state is invariant and purity is conserved") {
  Rng rng(101);
  const std::size_t dim = 4;
  const HamiltonianPair h(random_hermitian(dim, rng), random_hermitian(dim, rng));
  const double T = 1.5;
  const ControlPulse pulse(CrabBasis(2, T, 5), {0.3, 0.3, -0.2, 0.1}, 0.0, -1.0, 1.0,
                           ControlPulse::default_quantization_step(-1.0, 1.0));
  const PropagationConfig cfg{T, 8, SamplingRule::midpoint};

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(dim);
  REQUIRE(trace_distance(propagate_density(h, mixed, pulse, cfg), mixed) < 1e-10);

  const DensityMatrix rho0 = testing::random_density(dim, rng);
  const DensityMatrix rho1 = propagate_density(h, rho0, pulse, cfg);
  REQUIRE(rho1.purity() == Catch::Approx(rho0.purity()).margin(1e-9));
  REQUIRE(std::abs(rho1.matrix().trace().real() - 1.0) < 1e-10);
}

TEST_CASE("halving the step shrinks the error at the sampling rule's order") {
  const double T = 3.0;
  const HamiltonianPair h(pauli_z(), pauli_x());
  const ControlPulse pulse = smooth_test_pulse(T, 47, 0.6);

  auto deviation = [&](std::size_t segments, SamplingRule rule) {
    const ComplexMatrix ref = propagate_unitary(h, pulse, {T, 1024, rule});
    const ComplexMatrix coarse = propagate_unitary(h, pulse, {T, segments, rule});
    return (coarse - ref).norm();
  };

  const double mid_ratio =
      deviation(16, SamplingRule::midpoint) / deviation(32, SamplingRule::midpoint);
  REQUIRE(mid_ratio >= 3.8);

  const double left_ratio =
      deviation(16, SamplingRule::left_point) / deviation(32, SamplingRule::left_point);
  REQUIRE(left_ratio >= 1.9);
}

TEST_CASE("reversing the pulse and negating the generator inverts the propagator") {
  Rng rng(71);
  const std::size_t dim = 4;
  const HamiltonianPair h(random_hermitian(dim, rng), random_hermitian(dim, rng));
  const HamiltonianPair negated(-h.drift(), -h.control());
  const double T = 2.0;
  const ControlPulse pulse(CrabBasis(3, T, 11), {0.5, -0.3, 0.2, 0.4, -0.1, 0.3}, 0.0, -1.0,
                           1.0, ControlPulse::default_quantization_step(-1.0, 1.0));
  const PropagationConfig cfg{T, 16, SamplingRule::midpoint};

  std::vector<double> samples = sample_pulse(pulse, cfg);
  const ComplexMatrix forward = propagate_unitary_samples(h, samples, T);
  std::reverse(samples.begin(), samples.end());
  const ComplexMatrix backward = propagate_unitary_samples(negated, samples, T);
  REQUIRE((backward * forward - identity(dim)).norm() < 1e-8);
}

TEST_CASE("propagation validates pulse, config and dimensions") {
  const HamiltonianPair h(pauli_z(), pauli_x());
  const ControlPulse pulse = ControlPulse::constant(0.2, 2.0, -1.0, 1.0);
  REQUIRE_THROWS_AS(propagate_unitary(h, pulse, {1.0, 8, SamplingRule::midpoint}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(propagate_unitary(h, pulse, {2.0, 0, SamplingRule::midpoint}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(propagate_unitary(h, pulse, {-2.0, 8, SamplingRule::midpoint}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(propagate_pure(h, PureState::basis_state(4, 0), pulse,
                                   {2.0, 8, SamplingRule::midpoint}),
                    std::invalid_argument);
}
