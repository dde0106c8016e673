// Copyright 2026 The Mesphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "mesphase/errors.hpp"
#include "mesphase/evolution.hpp"
#include "mesphase/qstate.hpp"
#include "mesphase/topology.hpp"
#include "mesphase/types.hpp"
#include "test_support.hpp"

namespace mesphase {
namespace {

using testing::circle_distance;
using testing::make_rng;
using testing::loop_via_inverse;
using testing::loop_via_return;
using testing::phase_free_deviation;
using testing::random_axis;
using testing::random_mes;
using testing::random_segment;
using testing::random_spinor;
using testing::random_state;
using testing::state_deviation;
using testing::unitary_deviation;

// Kronecker-product oracle: embeds a 2x2 unitary on the chosen qubit and
// multiplies the 4-vector directly.
TwoQubitState kron_apply(const TwoQubitState& state, const OneQubitUnitary& u,
                         int qubit) {
  std::array<std::array<Complex, 4>, 4> big{};
  const std::array<std::array<Complex, 2>, 2> small{
      {{u.u00, u.u01}, {u.u10, u.u11}}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t r1 = r >> 1, r2 = r & 1, c1 = c >> 1, c2 = c & 1;
      if (qubit == 1) {
        big[r][c] = (r2 == c2) ? small[r1][c1] : Complex(0.0, 0.0);
      } else {
        big[r][c] = (r1 == c1) ? small[r2][c2] : Complex(0.0, 0.0);
      }
    }
  }
  std::array<Complex, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r] += big[r][c] * state.amp(c);
  }
  return TwoQubitState(out);
}

// Dense expectation value <psi| (n.sigma / 2 on the chosen qubit) |psi>.
double dense_expectation(const TwoQubitState& state, const Axis& axis, int qubit) {
  const std::array<std::array<Complex, 2>, 2> h{
      {{Complex(axis.nz() / 2.0, 0.0), Complex(axis.nx() / 2.0, -axis.ny() / 2.0)},
       {Complex(axis.nx() / 2.0, axis.ny() / 2.0), Complex(-axis.nz() / 2.0, 0.0)}}};
  Complex acc(0.0, 0.0);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t r1 = r >> 1, r2 = r & 1, c1 = c >> 1, c2 = c & 1;
      Complex entry(0.0, 0.0);
      if (qubit == 1 && r2 == c2) entry = h[r1][c1];
      if (qubit == 2 && r1 == c1) entry = h[r2][c2];
      acc += std::conj(state.amp(r)) * entry * state.amp(c);
    }
  }
  return acc.real();
}

TEST_CASE("Axis validates its input") {
  CHECK_THROWS_AS(Axis(0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(Axis(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(Axis(std::nan(""), 0.0, 0.0), DomainError);
  const Axis near(1.0 + 5e-7, 0.0, 0.0);
  CHECK(near.nx() == doctest::Approx(1.0).epsilon(1e-12));
  const Axis axis(0.0, 1.0, 0.0);
  const Axis flipped = axis.negated();
  CHECK(flipped.ny() == -1.0);
}

TEST_CASE("segment_unitary structure and reference value") {
  const Axis axis(std::sqrt(1.0 / 3.0) * -1.0, std::sqrt(1.0 / 3.0) * -1.0,
                  std::sqrt(1.0 / 3.0) * -1.0);
  const OneQubitUnitary u = segment_unitary(axis, kTwoPi / 3.0);
  // The A -> B transit matrix has both top-row entries (1 + i)/2.
  CHECK(std::abs(u.u00 - Complex(0.5, 0.5)) < 1e-12);
  CHECK(std::abs(u.u01 - Complex(0.5, 0.5)) < 1e-12);
  CHECK(u.u10 == -std::conj(u.u01));
  CHECK(u.u11 == std::conj(u.u00));

  const OneQubitUnitary eye = segment_unitary(axis, 0.0);
  CHECK(unitary_deviation(eye, OneQubitUnitary::identity()) == 0.0);

  auto rng = make_rng(41);
  for (int i = 0; i < 100; ++i) {
    const Axis n = random_axis(rng);
    std::uniform_real_distribution<double> time(0.0, 2.0 * kTwoPi);
    const OneQubitUnitary v = segment_unitary(n, time(rng));
    CHECK(unitarity_defect(v) < 1e-14);
  }
}

TEST_CASE("segment_unitary composes along a fixed axis") {
  auto rng = make_rng(43);
  std::uniform_real_distribution<double> time(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const Axis n = random_axis(rng);
    const double t1 = time(rng);
    const double t2 = time(rng);
    const OneQubitUnitary lhs = segment_unitary(n, t1 + t2);
    const OneQubitUnitary rhs = segment_unitary(n, t2) * segment_unitary(n, t1);
    CHECK(unitary_deviation(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("segment_unitary periodicity in SU(2)") {
  const Axis n(0.6, 0.0, 0.8);
  const OneQubitUnitary half = segment_unitary(n, kTwoPi);
  CHECK(std::abs(half.u00 + 1.0) < 1e-14);
  CHECK(std::abs(half.u01) < 1e-14);
  const OneQubitUnitary full = segment_unitary(n, 2.0 * kTwoPi);
  CHECK(unitary_deviation(full, OneQubitUnitary::identity()) < 1e-14);
}

TEST_CASE("rotation_from_unitary inverts segment_unitary") {
  auto rng = make_rng(47);
  std::uniform_real_distribution<double> time(1e-6, 2.0 * kTwoPi - 1e-6);
  for (int i = 0; i < 300; ++i) {
    const Axis n = random_axis(rng);
    const double t = time(rng);
    const RotationParameters r = rotation_from_unitary(segment_unitary(n, t));
    const OneQubitUnitary rebuilt = segment_unitary(r.axis, r.angle);
    CHECK(unitary_deviation(rebuilt, segment_unitary(n, t)) < 1e-9);
  }
  const RotationParameters at_identity =
      rotation_from_unitary(OneQubitUnitary::identity());
  CHECK(at_identity.angle == 0.0);
  CHECK(at_identity.axis.nz() == 1.0);
  const RotationParameters at_minus =
      rotation_from_unitary(OneQubitUnitary::su2({-1.0, 0.0}, {0.0, 0.0}));
  CHECK(at_minus.angle == doctest::Approx(2.0 * kTwoPi / 2.0).epsilon(1e-15));
  CHECK(at_minus.axis.nz() == 1.0);
}

TEST_CASE("unitary algebra helpers") {
  auto rng = make_rng(53);
  std::uniform_real_distribution<double> time(0.0, kTwoPi);
  for (int i = 0; i < 50; ++i) {
    const OneQubitUnitary a = segment_unitary(random_axis(rng), time(rng));
    const OneQubitUnitary b = segment_unitary(random_axis(rng), time(rng));
    CHECK(unitary_deviation((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-15);
    CHECK(unitary_deviation(a.adjoint() * a, OneQubitUnitary::identity()) < 1e-15);
    CHECK(unitary_deviation(a.transposed().transposed(), a) == 0.0);
  }
}

TEST_CASE("apply_segment matches the Kronecker oracle") {
  auto rng = make_rng(59);
  for (int i = 0; i < 200; ++i) {
    const TwoQubitState state = random_state(rng);
    const Segment segment = random_segment(rng);
    const OneQubitUnitary u = segment_unitary(segment.axis, segment.duration);
    const TwoQubitState expected = kron_apply(state, u, segment.qubit);
    CHECK(state_deviation(apply_segment(state, segment), expected) < 1e-14);
  }
}

TEST_CASE("apply_segment keeps the canonical MES structure exactly") {
  auto rng = make_rng(61);
  for (int i = 0; i < 200; ++i) {
    const TwoQubitState state = mes_from_spinor(random_spinor(rng));
    const TwoQubitState evolved = apply_segment(state, random_segment(rng));
    CHECK(evolved.amp(2) == -std::conj(evolved.amp(1)));
    CHECK(evolved.amp(3) == std::conj(evolved.amp(0)));
  }
}

TEST_CASE("hamiltonian_expectation matches the dense oracle") {
  auto rng = make_rng(67);
  for (int i = 0; i < 200; ++i) {
    const TwoQubitState state = random_state(rng);
    const Axis axis = random_axis(rng);
    const int qubit = (i % 2) + 1;
    CHECK(std::abs(hamiltonian_expectation(state, axis, qubit) -
                   dense_expectation(state, axis, qubit)) < 1e-14);
  }
  CHECK_THROWS_AS(
      hamiltonian_expectation(random_state(rng), random_axis(rng), 3),
      DomainError);
}

TEST_CASE("hamiltonian_expectation vanishes identically on canonical MES") {
  auto rng = make_rng(71);
  for (int i = 0; i < 200; ++i) {
    const TwoQubitState state = mes_from_spinor(random_spinor(rng));
    CHECK(hamiltonian_expectation(state, random_axis(rng), 1) == 0.0);
    CHECK(hamiltonian_expectation(state, random_axis(rng), 2) == 0.0);
  }
}

TEST_CASE("evolve_path sampling layout") {
  const Trajectory trajectory = standard_circuit(CircuitKind::Minus);
  const int samples = 16;
  const EvolutionTrace trace = evolve_path(trajectory, samples);
  const std::size_t expected = 1 + trajectory.segments.size() * samples;
  CHECK(trace.times.size() == expected);
  CHECK(trace.states.size() == expected);
  CHECK(trace.overlaps.size() == expected);
  CHECK(trace.energies.size() == expected);
  CHECK(trace.times.front() == 0.0);
  CHECK(trace.times.back() ==
        doctest::Approx(4.0 * kTwoPi / 3.0).epsilon(1e-14));
  for (std::size_t i = 1; i < trace.times.size(); ++i) {
    CHECK(trace.times[i] > trace.times[i - 1]);
  }
  CHECK(trace.overlaps.front().imag() == 0.0);
  CHECK(std::abs(trace.overlaps.front().real() - 1.0) < 1e-15);
  CHECK(trace.trajectory.has_value());

  CHECK_THROWS_AS(evolve_path(trajectory, 1), DomainError);
  CHECK_THROWS_AS(evolve_path(Trajectory{SpinorPair(1.0, 0.0), {}}, 8),
                  DomainError);
}

TEST_CASE("sampled overlaps of MES trajectories are exactly real") {
  const EvolutionTrace trace = evolve_path(standard_circuit(CircuitKind::Plus), 64);
  for (const Complex& overlap : trace.overlaps) CHECK(overlap.imag() == 0.0);
}

TEST_CASE("dynamical_phase is zero for the standard circuits") {
  for (CircuitKind kind : {CircuitKind::Plus, CircuitKind::Minus}) {
    const EvolutionTrace trace = evolve_path(standard_circuit(kind), 128);
    for (double energy : trace.energies) CHECK(energy == 0.0);
    CHECK(dynamical_phase(trace) == 0.0);
  }
}

TEST_CASE("pancharatnam_phase reads the overlap argument") {
  auto rng = make_rng(73);
  const TwoQubitState state = random_mes(rng);
  CHECK(pancharatnam_phase(state, state) == 0.0);

  std::uniform_real_distribution<double> angle(-kPi + 1e-3, kPi - 1e-3);
  for (int i = 0; i < 50; ++i) {
    const double alpha = angle(rng);
    const TwoQubitState base = random_state(rng);
    std::array<Complex, 4> rotated{};
    const Complex phase = std::polar(1.0, alpha);
    for (std::size_t k = 0; k < 4; ++k) rotated[k] = phase * base.amp(k);
    CHECK(std::abs(pancharatnam_phase(base, TwoQubitState(rotated)) - alpha) <
          1e-12);
  }

  const TwoQubitState a = vertex_state(VertexLabel::A);
  const TwoQubitState f = vertex_state(VertexLabel::F);
  CHECK(std::abs(inner_product(a, f)) < 1e-15);
  CHECK_THROWS_AS(pancharatnam_phase(a, f), OrthogonalStatesError);
}

TEST_CASE("crossing_events on the standard circuits") {
  const EvolutionTrace minus = evolve_path(standard_circuit(CircuitKind::Minus), 256);
  const CrossingReport minus_report = crossing_events(minus);
  CHECK(minus_report.parity == 1);
  REQUIRE(minus_report.crossings.size() == 1);
  CHECK(minus_report.tangential_contacts.empty());
  CHECK(std::abs(minus_report.crossings[0] - 2.0 * kTwoPi / 3.0) < 1e-9);

  const EvolutionTrace plus = evolve_path(standard_circuit(CircuitKind::Plus), 256);
  const CrossingReport plus_report = crossing_events(plus);
  CHECK(plus_report.parity == 0);
  CHECK(plus_report.crossings.empty());
  REQUIRE(plus_report.tangential_contacts.size() == 1);
  CHECK(std::abs(plus_report.tangential_contacts[0] - 2.0 * kTwoPi / 3.0) < 1e-9);
}

TEST_CASE("crossing_events requires the generating trajectory") {
  EvolutionTrace trace = evolve_path(standard_circuit(CircuitKind::Minus), 16);
  trace.trajectory.reset();
  CHECK_THROWS_AS(crossing_events(trace), DomainError);
}

TEST_CASE("crossing parity equals the homotopy class on random loops") {
  auto rng = make_rng(79);
  for (int i = 0; i < 20; ++i) {
    const Trajectory loop = loop_via_inverse(rng, 3);
    const PathClass path_class = classify(loop);
    const CrossingReport report = crossing_events(evolve_path(loop, 192));
    CHECK(report.parity == (path_class == PathClass::Minus ? 1 : 0));
    CHECK(path_class == PathClass::Plus);
  }
  for (int i = 0; i < 20; ++i) {
    const PathClass target = (i % 2 == 0) ? PathClass::Plus : PathClass::Minus;
    const Trajectory loop = loop_via_return(rng, 3, target);
    CHECK(classify(loop) == target);
    const CrossingReport report = crossing_events(evolve_path(loop, 192));
    CHECK(report.parity == (target == PathClass::Minus ? 1 : 0));
  }
}

TEST_CASE("precession_trace validates and samples one period") {
  CHECK_THROWS_AS(precession_trace(-0.1, 2000), DomainError);
  CHECK_THROWS_AS(precession_trace(kPi + 0.1, 2000), DomainError);
  CHECK_THROWS_AS(precession_trace(1.0, 999), DomainError);
  const EvolutionTrace trace = precession_trace(1.0, 2000);
  CHECK(trace.times.size() == 2001);
  CHECK(trace.times.front() == 0.0);
  CHECK(trace.times.back() == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(std::abs(trace.overlaps.front() - Complex(1.0, 0.0)) < 1e-15);
  // After a full period the state returns up to the -1 lift sign.
  CHECK(std::abs(std::abs(trace.overlaps.back()) - 1.0) < 1e-12);
  CHECK(circle_distance(std::arg(trace.overlaps.back()), kPi) < 1e-12);
}

TEST_CASE("precession_demo recovers the closed-form split") {
  const double theta = kPi / 3.0;
  const PhaseBreakdown phases = precession_demo(theta, 20000);
  CHECK(std::abs(phases.dynamical - (-kPi * std::cos(theta))) < 1e-6);
  CHECK(circle_distance(phases.geometric, -kPi * (1.0 - std::cos(theta))) < 1e-6);
  CHECK(circle_distance(phases.total, kPi) < 1e-12);
  // The split is consistent: total = dynamical + geometric modulo 2 pi.
  CHECK(circle_distance(phases.dynamical + phases.geometric, phases.total) < 1e-12);
}

TEST_CASE("precession geometric phase equals minus half the solid angle") {
  // Solid angle of the theta-cone is 2 pi (1 - cos theta).
  for (double theta : {0.4, 1.1, 2.2}) {
    const PhaseBreakdown phases = precession_demo(theta, 20000);
    const double solid_angle = kTwoPi * (1.0 - std::cos(theta));
    CHECK(circle_distance(phases.geometric, -solid_angle / 2.0) < 1e-6);
  }
}

}  // namespace
}  // namespace mesphase
