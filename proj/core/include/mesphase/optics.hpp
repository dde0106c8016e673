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

/// Unitary simulation of the photon-pair Mach-Zehnder experiment. One photon
/// stays in arm a; its twin enters the interferometer (arms b and c). The
/// eight-amplitude state space is spanned by |P_a Q_b> and |P_a Q_c> for
/// polarizations P, Q in {H, V}. Wave plates realize the one-qubit rotations
/// of the trajectory layer on the Poincare sphere; coincidence rates between
/// the arm-a and arm-b detectors trace the interference fringes.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mesphase/evolution.hpp"
#include "mesphase/types.hpp"

namespace mesphase {

/// Normalized photon-pair state over the basis, in order:
/// H_aH_b, H_aV_b, V_aH_b, V_aV_b, H_aH_c, H_aV_c, V_aH_c, V_aV_c.
class OpticalState {
 public:
  explicit OpticalState(const std::array<Complex, 8>& amps);

  const std::array<Complex, 8>& amps() const noexcept { return amps_; }
  Complex amp(std::size_t index) const { return amps_[index]; }

  /// Joint probability of finding the interferometer photon in arm b
  /// (coincidence D_a & D_b), summed over polarizations.
  double coincidence_ab() const noexcept;
  /// Complementary port: interferometer photon in arm c.
  double coincidence_ac() const noexcept;

 private:
  std::array<Complex, 8> amps_;
};

enum class Arm { A, B, C };

/// An element of the optical table. Both beam splitters use the fixed
/// unitary 50/50 convention: transmission 1/sqrt(2), reflection i/sqrt(2).
class OpticalElement {
 public:
  enum class Kind { BeamSplitter1, BeamSplitter2, PhaseShift, Plate };

  static OpticalElement bs1() noexcept;
  static OpticalElement bs2() noexcept;
  /// Multiplies every mode-b amplitude by exp(i*phi).
  static OpticalElement phase_shift(double phi);
  /// Applies `u` to the polarization of the photon in `arm`. Throws
  /// DomainError unless `u` is unitary within 1e-9.
  static OpticalElement plate(Arm arm, const OneQubitUnitary& u);

  Kind kind() const noexcept { return kind_; }
  double phi() const noexcept { return phi_; }
  Arm arm() const noexcept { return arm_; }
  const OneQubitUnitary& unitary() const noexcept { return unitary_; }

 private:
  OpticalElement() = default;

  Kind kind_ = Kind::BeamSplitter1;
  double phi_ = 0.0;
  Arm arm_ = Arm::A;
  OneQubitUnitary unitary_ = OneQubitUnitary::identity();
};

/// Settings of the three-plate realization of an arbitrary polarization
/// rotation: dephasings +psi, delta, -psi with the middle plate at angle
/// theta from vertical. Ranges: theta in [0, pi/2], psi in (-pi, pi],
/// delta in [0, 2pi).
struct WavePlateTriple {
  WavePlateTriple(double psi, double theta, double delta);

  double psi;
  double theta;
  double delta;
};

/// How the trajectory's rotations are laid out on the table.
///  - Reference: no plates, plain Mach-Zehnder fringes.
///  - Folded: the whole circuit is compiled onto arm c through the MES
///    transpose identity; reproduces the shifted fringes at unit visibility.
///  - Literal: qubit-1 plates on arm a, qubit-2 plates on arm c (the layout
///    with plates on both arms); kept for study - its honest propagation
///    gives flat fringes for the standard circuits because the two branches
///    carry mutually orthogonal MES.
enum class Placement { Folded, Literal, Reference };

struct ExperimentConfig {
  Placement placement;
  std::optional<Trajectory> trajectory;  // ignored for Reference
  std::vector<double> phi_values;
};

struct FringeRecord {
  double phi;
  double p_coincidence_ab;
  double p_coincidence_ac;
};

/// The photon pair emerging from the source: (|H_aV_b> + |V_aH_b>)/sqrt(2),
/// arm c empty. Under the logical relabeling (a: H->0, V->1; interferometer
/// photon: V->0, H->1) this is the vertex-A MES.
OpticalState source_state();

OpticalState apply_element(const OpticalState& state, const OpticalElement& element);

/// The rotation realized by the triple: segment_unitary about the axis
/// (-sin 2theta cos psi, sin 2theta sin psi, cos 2theta) for time delta.
OneQubitUnitary waveplate_unitary(const WavePlateTriple& plates);

/// Inverts the correspondence: finds plate settings whose rotation equals
/// segment_unitary(axis, t) up to global phase. t is reduced mod 4pi and
/// folded into [0, 2pi) with axis negation for the upper half turn.
WavePlateTriple compile_plates(const Axis& axis, double t);

/// Compiles the full trajectory into an ordered plate list for the
/// interferometer arm: qubit-1 unitaries are moved across the vertex-A
/// source with the transpose identity (M x Id)|A> = (Id x M^T)|A> (order
/// reversed, applied first), qubit-2 unitaries follow in order; every plate
/// is conjugated into the physical H/V basis. Applying the list to the
/// source reproduces the trajectory's final MES exactly.
std::vector<OneQubitUnitary> fold_circuit_to_arm(const Trajectory& trajectory);

/// Runs the configured interferometer for every phi and returns one record
/// per value. The optical source is always the physical photon pair (vertex
/// A); the trajectory contributes its segment schedule.
std::vector<FringeRecord> run_experiment(const ExperimentConfig& config);

/// (P_max - P_min) / (P_max + P_min) of the ab-coincidence over the scan.
/// Requires at least 8 records spanning a full 2pi period.
double visibility(const std::vector<FringeRecord>& records);

}  // namespace mesphase
