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

#include "mesphase/optics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mesphase/errors.hpp"

namespace mesphase {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Basis index: arm (b = 0, c = 1) * 4 + pol_a * 2 + pol_other, with H = 0,
// V = 1 in the physical basis.
constexpr std::size_t kArmC = 4;

// Conjugation by sigma_x, which converts a unitary between the logical basis
// of the interferometer photon (V = 0, H = 1) and the physical (H, V) order.
OneQubitUnitary swap_conjugate(const OneQubitUnitary& u) {
  return {u.u11, u.u10, u.u01, u.u00};
}

void check_unitary(const OneQubitUnitary& u) {
  const double defect = unitarity_defect(u);
  if (!(defect <= 1e-9)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "plate matrix unitarity defect %.3g", defect);
    throw DomainError(buf);
  }
}

}  // namespace

OpticalState::OpticalState(const std::array<Complex, 8>& amps) : amps_(amps) {
  double norm_sq = 0.0;
  for (const Complex& c : amps_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("optical amplitude is not finite");
    }
    norm_sq += std::norm(c);
  }
  if (std::abs(norm_sq - 1.0) > kNormInputTol) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "optical state squared norm is %.17g", norm_sq);
    throw NotNormalizedError(buf);
  }
  const double norm = std::sqrt(norm_sq);
  if (norm != 1.0) {
    for (Complex& c : amps_) c /= norm;
  }
}

double OpticalState::coincidence_ab() const noexcept {
  double p = 0.0;
  for (std::size_t i = 0; i < kArmC; ++i) p += std::norm(amps_[i]);
  return p;
}

double OpticalState::coincidence_ac() const noexcept {
  double p = 0.0;
  for (std::size_t i = kArmC; i < 8; ++i) p += std::norm(amps_[i]);
  return p;
}

OpticalElement OpticalElement::bs1() noexcept {
  OpticalElement e;
  e.kind_ = Kind::BeamSplitter1;
  return e;
}

OpticalElement OpticalElement::bs2() noexcept {
  OpticalElement e;
  e.kind_ = Kind::BeamSplitter2;
  return e;
}

OpticalElement OpticalElement::phase_shift(double phi) {
  if (!std::isfinite(phi)) throw DomainError("phase shift is not finite");
  OpticalElement e;
  e.kind_ = Kind::PhaseShift;
  e.phi_ = phi;
  return e;
}

OpticalElement OpticalElement::plate(Arm arm, const OneQubitUnitary& u) {
  check_unitary(u);
  OpticalElement e;
  e.kind_ = Kind::Plate;
  e.arm_ = arm;
  e.unitary_ = u;
  return e;
}

OpticalState source_state() {
  std::array<Complex, 8> amps{};
  amps[1] = kInvSqrt2;  // H_a V_b
  amps[2] = kInvSqrt2;  // V_a H_b
  return OpticalState(amps);
}

OpticalState apply_element(const OpticalState& state, const OpticalElement& element) {
  std::array<Complex, 8> out = state.amps();
  switch (element.kind()) {
    case OpticalElement::Kind::BeamSplitter1:
    case OpticalElement::Kind::BeamSplitter2: {
      // |b> -> (|b> + i|c>)/sqrt(2), |c> -> (i|b> + |c>)/sqrt(2), applied to
      // the arm index with polarizations untouched.
      const Complex i_unit(0.0, 1.0);
      for (std::size_t p = 0; p < 4; ++p) {
        const Complex b = out[p];
        const Complex c = out[p + kArmC];
        out[p] = (b + i_unit * c) * kInvSqrt2;
        out[p + kArmC] = (i_unit * b + c) * kInvSqrt2;
      }
      break;
    }
    case OpticalElement::Kind::PhaseShift: {
      const Complex phase = std::polar(1.0, element.phi());
      for (std::size_t p = 0; p < 4; ++p) out[p] *= phase;
      break;
    }
    case OpticalElement::Kind::Plate: {
      const OneQubitUnitary& u = element.unitary();
      if (element.arm() == Arm::A) {
        // The arm-a photon's polarization index is bit 1 within each arm
        // block; act on all 8 components.
        for (std::size_t base : {std::size_t{0}, std::size_t{1}, std::size_t{4},
                                 std::size_t{5}}) {
          const Complex h = out[base];
          const Complex v = out[base + 2];
          out[base] = u.u00 * h + u.u01 * v;
          out[base + 2] = u.u10 * h + u.u11 * v;
        }
      } else {
        const std::size_t arm_base = (element.arm() == Arm::B) ? 0 : kArmC;
        for (std::size_t pa = 0; pa < 2; ++pa) {
          const std::size_t base = arm_base + 2 * pa;
          const Complex h = out[base];
          const Complex v = out[base + 1];
          out[base] = u.u00 * h + u.u01 * v;
          out[base + 1] = u.u10 * h + u.u11 * v;
        }
      }
      break;
    }
  }
  return OpticalState(out);
}

WavePlateTriple::WavePlateTriple(double psi_in, double theta_in, double delta_in)
    : psi(psi_in), theta(theta_in), delta(delta_in) {
  if (!std::isfinite(psi) || !std::isfinite(theta) || !std::isfinite(delta)) {
    throw DomainError("plate setting is not finite");
  }
  if (theta < 0.0 || theta > kPi / 2.0) {
    throw DomainError("plate theta must lie in [0, pi/2]");
  }
  if (psi <= -kPi || psi > kPi) {
    throw DomainError("plate psi must lie in (-pi, pi]");
  }
  if (delta < 0.0 || delta >= kTwoPi) {
    throw DomainError("plate delta must lie in [0, 2pi)");
  }
}

OneQubitUnitary waveplate_unitary(const WavePlateTriple& plates) {
  const double s2t = std::sin(2.0 * plates.theta);
  const double c2t = std::cos(2.0 * plates.theta);
  const Axis axis(-s2t * std::cos(plates.psi), s2t * std::sin(plates.psi), c2t);
  return segment_unitary(axis, plates.delta);
}

WavePlateTriple compile_plates(const Axis& axis, double t) {
  if (!std::isfinite(t)) throw DomainError("rotation time is not finite");
  double reduced = std::fmod(t, 2.0 * kTwoPi);
  if (reduced < 0.0) reduced += 2.0 * kTwoPi;
  double nx = axis.nx();
  double ny = axis.ny();
  double nz = axis.nz();
  if (reduced > kTwoPi) {
    // exp(-i t/2 n.sigma) = exp(-i (4pi - t)/2 (-n).sigma): fold the upper
    // half turn onto the negated axis, keeping delta inside [0, 2pi).
    reduced = 2.0 * kTwoPi - reduced;
    nx = -nx;
    ny = -ny;
    nz = -nz;
  } else if (reduced == kTwoPi) {
    // A full 2pi rotation is -Identity for every axis; delta = 0 realizes it
    // up to the global phase the round-trip contract allows.
    reduced = 0.0;
  }
  const double theta = 0.5 * std::acos(std::clamp(nz, -1.0, 1.0));
  const double s2t = std::sin(2.0 * theta);
  const double psi = (s2t > 1e-12) ? wrap_angle(std::atan2(ny, -nx)) : 0.0;
  return WavePlateTriple(psi, theta, reduced);
}

std::vector<OneQubitUnitary> fold_circuit_to_arm(const Trajectory& trajectory) {
  // (M x Id) and (Id x M^T) act identically on the logical vertex-A source,
  // so qubit-1 unitaries move to the interferometer photon transposed, with
  // their order reversed; qubit-2 unitaries keep their order. Every plate is
  // then conjugated into the physical H/V basis of the interferometer arm.
  std::vector<OneQubitUnitary> qubit1;
  std::vector<OneQubitUnitary> plates;
  for (const Segment& segment : trajectory.segments) {
    const OneQubitUnitary u = segment_unitary(segment.axis, segment.duration);
    if (segment.qubit == 1) {
      qubit1.push_back(u.transposed());
    }
  }
  for (auto it = qubit1.rbegin(); it != qubit1.rend(); ++it) {
    plates.push_back(swap_conjugate(*it));
  }
  for (const Segment& segment : trajectory.segments) {
    if (segment.qubit == 2) {
      plates.push_back(
          swap_conjugate(segment_unitary(segment.axis, segment.duration)));
    }
  }
  return plates;
}

namespace {

std::vector<OpticalElement> experiment_elements(const ExperimentConfig& config,
                                                double phi) {
  std::vector<OpticalElement> elements;
  switch (config.placement) {
    case Placement::Reference:
      elements.push_back(OpticalElement::bs1());
      elements.push_back(OpticalElement::phase_shift(phi));
      elements.push_back(OpticalElement::bs2());
      break;
    case Placement::Folded: {
      if (!config.trajectory.has_value()) {
        throw DomainError("folded placement needs a trajectory");
      }
      elements.push_back(OpticalElement::bs1());
      elements.push_back(OpticalElement::phase_shift(phi));
      for (const OneQubitUnitary& u : fold_circuit_to_arm(*config.trajectory)) {
        elements.push_back(OpticalElement::plate(Arm::C, u));
      }
      elements.push_back(OpticalElement::bs2());
      break;
    }
    case Placement::Literal: {
      if (!config.trajectory.has_value()) {
        throw DomainError("literal placement needs a trajectory");
      }
      // Qubit-1 plates act on the photon in arm a, where any compiled global
      // phase is common to both interferometer branches and drops out of the
      // rates; qubit-2 plates sit in arm c and use the exact unitaries.
      for (const Segment& segment : config.trajectory->segments) {
        if (segment.qubit != 1) continue;
        const WavePlateTriple triple = compile_plates(segment.axis, segment.duration);
        elements.push_back(OpticalElement::plate(Arm::A, waveplate_unitary(triple)));
      }
      elements.push_back(OpticalElement::bs1());
      elements.push_back(OpticalElement::phase_shift(phi));
      for (const Segment& segment : config.trajectory->segments) {
        if (segment.qubit != 2) continue;
        elements.push_back(OpticalElement::plate(
            Arm::C,
            swap_conjugate(segment_unitary(segment.axis, segment.duration))));
      }
      elements.push_back(OpticalElement::bs2());
      break;
    }
  }
  return elements;
}

}  // namespace

std::vector<FringeRecord> run_experiment(const ExperimentConfig& config) {
  if (config.phi_values.empty()) {
    throw DomainError("experiment needs at least one phi value");
  }
  std::vector<FringeRecord> records;
  records.reserve(config.phi_values.size());
  for (double phi : config.phi_values) {
    OpticalState state = source_state();
    for (const OpticalElement& element : experiment_elements(config, phi)) {
      state = apply_element(state, element);
    }
    records.push_back(FringeRecord{phi, state.coincidence_ab(), state.coincidence_ac()});
  }
  return records;
}

double visibility(const std::vector<FringeRecord>& records) {
  if (records.size() < 8) {
    throw DomainError("visibility needs at least 8 fringe records");
  }
  double phi_min = records.front().phi;
  double phi_max = phi_min;
  double p_min = records.front().p_coincidence_ab;
  double p_max = p_min;
  for (const FringeRecord& r : records) {
    phi_min = std::min(phi_min, r.phi);
    phi_max = std::max(phi_max, r.phi);
    p_min = std::min(p_min, r.p_coincidence_ab);
    p_max = std::max(p_max, r.p_coincidence_ab);
  }
  if (phi_max - phi_min < kTwoPi - 1e-9) {
    throw DomainError("visibility needs a full 2pi phase scan");
  }
  const double denom = p_max + p_min;
  if (denom == 0.0) return 0.0;
  return (p_max - p_min) / denom;
}

}  // namespace mesphase
