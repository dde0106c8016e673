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

#include "mesphase/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mesphase/errors.hpp"
#include "mesphase/qstate.hpp"

namespace mesphase {

namespace {

// Overlap magnitudes below this are treated as exact zeros by the crossing
// scanner. MES overlaps computed here are real with O(1e-16) arithmetic
// noise, so the gap between "zero" and the nearest meaningful sample value
// is many orders of magnitude.
constexpr double kZeroTol = 1e-12;

constexpr double kBisectionTol = 1e-12;

TwoQubitState apply_unitary(const TwoQubitState& state, const OneQubitUnitary& u,
                            int qubit) {
  const auto& a = state.amps();
  if (qubit == 1) {
    return TwoQubitState({u.u00 * a[0] + u.u01 * a[2],
                          u.u00 * a[1] + u.u01 * a[3],
                          u.u10 * a[0] + u.u11 * a[2],
                          u.u10 * a[1] + u.u11 * a[3]});
  }
  return TwoQubitState({u.u00 * a[0] + u.u01 * a[1],
                        u.u10 * a[0] + u.u11 * a[1],
                        u.u00 * a[2] + u.u01 * a[3],
                        u.u10 * a[2] + u.u11 * a[3]});
}

// State at time t_rem into the given segment, from the segment's start state.
TwoQubitState partial_state(const TwoQubitState& start, const Segment& segment,
                            double t_rem) {
  return apply_unitary(start, segment_unitary(segment.axis, t_rem), segment.qubit);
}

}  // namespace

Axis::Axis(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {
  if (!std::isfinite(nx_) || !std::isfinite(ny_) || !std::isfinite(nz_)) {
    throw DomainError("axis component is not finite");
  }
  const double norm = std::sqrt(nx_ * nx_ + ny_ * ny_ + nz_ * nz_);
  if (std::abs(norm - 1.0) > kAxisInputTol) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "axis has norm %.17g, expected 1", norm);
    throw DomainError(buf);
  }
  if (norm != 1.0) {
    nx_ /= norm;
    ny_ /= norm;
    nz_ /= norm;
  }
}

Axis Axis::negated() const noexcept {
  Axis copy = *this;
  copy.nx_ = -copy.nx_;
  copy.ny_ = -copy.ny_;
  copy.nz_ = -copy.nz_;
  return copy;
}

OneQubitUnitary operator*(const OneQubitUnitary& lhs, const OneQubitUnitary& rhs) noexcept {
  return {lhs.u00 * rhs.u00 + lhs.u01 * rhs.u10,
          lhs.u00 * rhs.u01 + lhs.u01 * rhs.u11,
          lhs.u10 * rhs.u00 + lhs.u11 * rhs.u10,
          lhs.u10 * rhs.u01 + lhs.u11 * rhs.u11};
}

double unitarity_defect(const OneQubitUnitary& u) {
  const OneQubitUnitary p = u.adjoint() * u;
  return std::max({std::abs(p.u00 - Complex(1.0)), std::abs(p.u01),
                   std::abs(p.u10), std::abs(p.u11 - Complex(1.0))});
}

Segment::Segment(Axis axis_in, double duration_in, int qubit_in)
    : axis(axis_in), duration(duration_in), qubit(qubit_in) {
  if (!std::isfinite(duration) || duration < 0.0) {
    throw DomainError("segment duration must be finite and non-negative");
  }
  if (qubit != 1 && qubit != 2) {
    throw DomainError("segment qubit must be 1 or 2");
  }
}

OneQubitUnitary segment_unitary(const Axis& axis, double t) {
  if (!std::isfinite(t)) throw DomainError("segment time is not finite");
  const double c = std::cos(t / 2.0);
  const double s = std::sin(t / 2.0);
  return OneQubitUnitary::su2(Complex(c, -axis.nz() * s),
                              Complex(-axis.ny() * s, -axis.nx() * s));
}

RotationParameters rotation_from_unitary(const OneQubitUnitary& u) {
  const double c = std::clamp(u.u00.real(), -1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double angle = 2.0 * std::acos(c);
  if (s < 1e-8) {
    // Near +/-identity the axis is unconstrained; +z by convention.
    return {Axis(0.0, 0.0, 1.0), angle};
  }
  return {Axis(-u.u01.imag() / s, -u.u01.real() / s, -u.u00.imag() / s), angle};
}

TwoQubitState apply_segment(const TwoQubitState& state, const Segment& segment) {
  return apply_unitary(state, segment_unitary(segment.axis, segment.duration),
                       segment.qubit);
}

double hamiltonian_expectation(const TwoQubitState& state, const Axis& axis, int qubit) {
  if (qubit != 1 && qubit != 2) throw DomainError("qubit must be 1 or 2");
  const auto& a = state.amps();
  // Populations and coherence of the reduced state of the addressed qubit.
  double pop0, pop1;
  Complex coh;  // <0|rho|1>
  if (qubit == 1) {
    pop0 = std::norm(a[0]) + std::norm(a[1]);
    pop1 = std::norm(a[2]) + std::norm(a[3]);
    coh = a[0] * std::conj(a[2]) + a[1] * std::conj(a[3]);
  } else {
    pop0 = std::norm(a[0]) + std::norm(a[2]);
    pop1 = std::norm(a[1]) + std::norm(a[3]);
    coh = a[0] * std::conj(a[1]) + a[2] * std::conj(a[3]);
  }
  // <(1/2) n.sigma> = (1/2)(nz(p0 - p1)) + nx Re(coh) + ny Im(...): the
  // trace Tr(rho sigma_x) = 2 Re coh, Tr(rho sigma_y) = -2 Im coh for
  // coh = <0|rho|1>.
  return 0.5 * (axis.nz() * (pop0 - pop1)) + axis.nx() * coh.real() -
         axis.ny() * coh.imag();
}

EvolutionTrace evolve_path(const Trajectory& trajectory, int samples_per_segment) {
  if (samples_per_segment < 2) {
    throw DomainError("need at least 2 samples per segment");
  }
  if (trajectory.segments.empty()) {
    throw DomainError("cannot sample an empty trajectory");
  }
  EvolutionTrace trace;
  trace.trajectory = trajectory;

  const TwoQubitState initial = mes_from_spinor(trajectory.initial);
  TwoQubitState state = initial;
  double segment_start_time = 0.0;

  trace.times.push_back(0.0);
  trace.states.push_back(state);
  trace.overlaps.push_back(inner_product(initial, state));
  trace.energies.push_back(hamiltonian_expectation(
      state, trajectory.segments.front().axis, trajectory.segments.front().qubit));

  for (const Segment& segment : trajectory.segments) {
    const TwoQubitState start = state;
    if (segment.duration > 0.0) {
      for (int j = 1; j <= samples_per_segment; ++j) {
        const double t_rem = (j == samples_per_segment)
                                 ? segment.duration
                                 : segment.duration * j / samples_per_segment;
        const TwoQubitState sample = partial_state(start, segment, t_rem);
        trace.times.push_back(segment_start_time + t_rem);
        trace.states.push_back(sample);
        trace.overlaps.push_back(inner_product(initial, sample));
        trace.energies.push_back(
            hamiltonian_expectation(sample, segment.axis, segment.qubit));
      }
    }
    // Zero-duration segments are identity steps: they contribute no samples,
    // which keeps the times strictly increasing.
    if (segment.duration > 0.0) state = trace.states.back();
    segment_start_time += segment.duration;
  }
  return trace;
}

double dynamical_phase(const EvolutionTrace& trace) {
  if (trace.times.size() < 2) return 0.0;
  double integral = 0.0;
  for (std::size_t i = 1; i < trace.times.size(); ++i) {
    integral += 0.5 * (trace.times[i] - trace.times[i - 1]) *
                (trace.energies[i] + trace.energies[i - 1]);
  }
  return -integral;
}

double pancharatnam_phase(const TwoQubitState& reference, const TwoQubitState& current) {
  const Complex overlap = inner_product(reference, current);
  if (std::abs(overlap) < kOrthogonalTol) {
    throw OrthogonalStatesError("overlap magnitude below 1e-9, phase undefined");
  }
  return wrap_angle(std::arg(overlap));
}

CrossingReport crossing_events(const EvolutionTrace& trace) {
  if (!trace.trajectory.has_value()) {
    throw DomainError("crossing detection needs the generating trajectory");
  }
  const Trajectory& trajectory = *trace.trajectory;
  const TwoQubitState initial = mes_from_spinor(trajectory.initial);

  // Segment start states and start times, for partial-time evaluation.
  std::vector<TwoQubitState> seg_starts;
  std::vector<double> seg_times;
  {
    TwoQubitState state = initial;
    double t = 0.0;
    for (const Segment& segment : trajectory.segments) {
      seg_starts.push_back(state);
      seg_times.push_back(t);
      state = apply_segment(state, segment);
      t += segment.duration;
    }
  }
  auto overlap_at = [&](double t) {
    for (std::size_t k = trajectory.segments.size(); k-- > 0;) {
      if (t >= seg_times[k]) {
        const Segment& segment = trajectory.segments[k];
        const double t_rem = std::min(t - seg_times[k], segment.duration);
        return inner_product(initial, partial_state(seg_starts[k], segment, t_rem))
            .real();
      }
    }
    return inner_product(initial, initial).real();
  };

  CrossingReport report{{}, {}, 0};
  const std::vector<double>& times = trace.times;
  const std::vector<Complex>& overlaps = trace.overlaps;
  const std::size_t n = times.size();

  auto sign_of = [](double v) { return (std::abs(v) <= kZeroTol) ? 0 : (v > 0.0 ? 1 : -1); };

  std::size_t i = 0;
  int prev_sign = 0;
  double prev_time = 0.0;
  while (i < n) {
    const int s = sign_of(overlaps[i].real());
    if (s == 0) {
      // Maximal run of zero samples; its classification depends on the signs
      // on both sides.
      const std::size_t run_start = i;
      while (i < n && sign_of(overlaps[i].real()) == 0) ++i;
      const std::size_t run_end = i;  // one past
      const double event_time =
          0.5 * (times[run_start] + times[run_end - 1]);
      const int next_sign = (i < n) ? sign_of(overlaps[i].real()) : 0;
      if (prev_sign != 0 && next_sign != 0 && prev_sign != next_sign) {
        report.crossings.push_back(event_time);
      } else {
        report.tangential_contacts.push_back(event_time);
      }
      // The run consumed the event; the next signed sample must not be
      // paired with the sign from before the run.
      prev_sign = 0;
      prev_time = times[run_end - 1];
      continue;
    }
    if (prev_sign != 0 && s != prev_sign) {
      // Strict sign change between adjacent samples: bisect inside the
      // bracket, which by construction lies within a single segment.
      double lo = prev_time;
      double hi = times[i];
      double f_lo = overlap_at(lo);
      while (hi - lo > kBisectionTol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = overlap_at(mid);
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      report.crossings.push_back(0.5 * (lo + hi));
    }
    prev_sign = s;
    prev_time = times[i];
    ++i;
  }
  report.parity = static_cast<int>(report.crossings.size() % 2);
  return report;
}

EvolutionTrace precession_trace(double theta, int steps) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    throw DomainError("precession theta must lie in [0, pi]");
  }
  if (steps < 1000) throw DomainError("precession needs at least 1000 steps");

  const double ca = std::cos(theta / 2.0);
  const double sa = std::sin(theta / 2.0);
  const Axis z_axis(0.0, 0.0, 1.0);

  EvolutionTrace trace;
  for (int j = 0; j <= steps; ++j) {
    const double t = kTwoPi * j / steps;
    // Qubit state under H = sigma_z/2 embedded as (spin x |0>): amplitudes
    // on |00> and |10> only, so the two-qubit machinery applies verbatim.
    const Complex a = std::polar(ca, -t / 2.0);
    const Complex b = std::polar(sa, t / 2.0);
    const TwoQubitState state({a, 0.0, b, 0.0});
    trace.times.push_back(t);
    trace.states.push_back(state);
    trace.overlaps.push_back(inner_product(trace.states.front(), state));
    trace.energies.push_back(hamiltonian_expectation(state, z_axis, 1));
  }
  return trace;
}

PhaseBreakdown precession_demo(double theta, int steps) {
  const EvolutionTrace trace = precession_trace(theta, steps);
  const double dynamical = dynamical_phase(trace);
  const double total = wrap_angle(std::arg(trace.overlaps.back()));
  const double geometric = wrap_angle(total - dynamical);
  return PhaseBreakdown{dynamical, geometric, total};
}

}  // namespace mesphase
