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

/// Piecewise single-qubit evolution of two-qubit states. Each segment evolves
/// one qubit under H = (1/2) n.sigma for a fixed duration (hbar*omega = 1
/// units), which is an exact SU(2) flow. On top of the sampled traces sit the
/// phase functionals: dynamical phase, Pancharatnam phase, and the detector
/// for crossings of the space orthogonal to the initial state.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mesphase/qstate.hpp"
#include "mesphase/types.hpp"

namespace mesphase {

/// Unit 3-vector giving the orientation of the effective field. Input must be
/// normalized within 1e-6 (throws DomainError otherwise); the stored vector
/// is renormalized to machine precision.
class Axis {
 public:
  Axis(double nx, double ny, double nz);

  double nx() const noexcept { return nx_; }
  double ny() const noexcept { return ny_; }
  double nz() const noexcept { return nz_; }

  Axis negated() const noexcept;

 private:
  double nx_, ny_, nz_;
};

/// 2x2 complex matrix. All matrices produced by the library are special
/// unitary: u11 = conj(u00) and u10 = -conj(u01) hold exactly as stored.
struct OneQubitUnitary {
  Complex u00, u01, u10, u11;

  /// The SU(2) matrix with first row (a, b).
  static OneQubitUnitary su2(Complex a, Complex b) noexcept {
    return {a, b, -std::conj(b), std::conj(a)};
  }

  static OneQubitUnitary identity() noexcept { return su2({1.0, 0.0}, {0.0, 0.0}); }

  OneQubitUnitary transposed() const noexcept { return {u00, u10, u01, u11}; }
  OneQubitUnitary adjoint() const noexcept {
    return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
  }
};

OneQubitUnitary operator*(const OneQubitUnitary& lhs, const OneQubitUnitary& rhs) noexcept;

/// Largest deviation of U^dagger * U from the identity; 0 for exact unitaries.
double unitarity_defect(const OneQubitUnitary& u);

/// One leg of a polygonal path: rotate `qubit` (1 or 2) about `axis` for
/// `duration`. Throws DomainError on negative/non-finite duration or a qubit
/// outside {1, 2}.
struct Segment {
  Segment(Axis axis, double duration, int qubit);

  Axis axis;
  double duration;
  int qubit;
};

/// An initial MES (as its spinor pair) plus an ordered list of segments.
/// An empty segment list is the trivial loop; it is valid for classification
/// but not for trace generation.
struct Trajectory {
  SpinorPair initial;
  std::vector<Segment> segments;
};

/// Sampled evolution record. `overlaps[i]` is <psi(0)|psi(times[i])> and
/// `energies[i]` the expectation of the active segment Hamiltonian (at
/// boundary instants, the segment that ends there). The generating trajectory
/// is kept when available; crossing detection needs it to refine event times.
struct EvolutionTrace {
  std::optional<Trajectory> trajectory;
  std::vector<double> times;
  std::vector<TwoQubitState> states;
  std::vector<Complex> overlaps;
  std::vector<double> energies;
};

/// Cycle phase split into its dynamical and geometric parts. `total` and
/// `geometric` are wrapped into (-pi, pi]; `dynamical` is the raw integral
/// -int <H> dt (unwrapped, so a pure-precession value of -pi is reported as
/// -pi, not folded to +pi).
struct PhaseBreakdown {
  double dynamical;
  double geometric;
  double total;
};

/// Crossings of the space orthogonal to the initial state, split into
/// sign-changing events (counted in `parity`) and tangential contacts where
/// the overlap touches zero without changing sign (reported, not counted).
struct CrossingReport {
  std::vector<double> crossings;
  std::vector<double> tangential_contacts;
  int parity;
};

/// Evolution operator exp(-i t H) for H = (1/2) n.sigma:
///   [ cos(t/2) - i nz sin(t/2)      -i (nx - i ny) sin(t/2) ]
///   [ -i (nx + i ny) sin(t/2)       cos(t/2) + i nz sin(t/2) ]
OneQubitUnitary segment_unitary(const Axis& axis, double t);

/// Recovers (axis, t) with t in [0, 2pi] from a special unitary, inverting
/// segment_unitary. For +/-identity the axis is conventionally +z.
struct RotationParameters {
  Axis axis;
  double angle;
};
RotationParameters rotation_from_unitary(const OneQubitUnitary& u);

/// Applies (U x Id) or (Id x U) for the segment's whole duration.
TwoQubitState apply_segment(const TwoQubitState& state, const Segment& segment);

/// Expectation of the one-sided Hamiltonian (1/2) n.sigma on `qubit`.
double hamiltonian_expectation(const TwoQubitState& state, const Axis& axis, int qubit);

/// Samples the trajectory with `samples_per_segment` uniform steps inside
/// each segment (boundary states are exact whole-segment products; interior
/// states use the partial-time unitary). Throws DomainError for fewer than 2
/// samples per segment or an empty trajectory.
EvolutionTrace evolve_path(const Trajectory& trajectory, int samples_per_segment);

/// -int <H(t)> dt by the trapezoidal rule over the trace samples.
double dynamical_phase(const EvolutionTrace& trace);

/// arg <reference|current> in (-pi, pi]. Throws OrthogonalStates when the
/// overlap magnitude is below 1e-9 (the phase is undefined at a crossing).
double pancharatnam_phase(const TwoQubitState& reference, const TwoQubitState& current);

/// Scans the trace overlap for zeros. Sign changes between samples are
/// refined by bisection on the exact partial-segment unitary to 1e-12;
/// tangential contacts are reported at the touching sample. Requires the
/// trace to carry its trajectory.
CrossingReport crossing_events(const EvolutionTrace& trace);

/// One full precession period of a single qubit cos(theta/2)|0> +
/// sin(theta/2)|1> under H = sigma_z / 2, embedded as (qubit x |0>) so the
/// trace machinery applies. theta must lie in [0, pi], steps >= 1000.
EvolutionTrace precession_trace(double theta, int steps);

/// Phase decomposition of the precession cycle: total = arg<psi(0)|psi(T)>,
/// dynamical from the trace integral, geometric = total - dynamical wrapped
/// to (-pi, pi]. The geometric part reproduces the Berry solid-angle value
/// -pi(1 - cos theta) modulo 2pi.
PhaseBreakdown precession_demo(double theta, int steps);

}  // namespace mesphase
