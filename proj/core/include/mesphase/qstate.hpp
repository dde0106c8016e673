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

/// Two-qubit state algebra: normalized four-amplitude states, the complex
/// concurrence, the canonical form of maximally entangled states (MES) as a
/// spinor pair on S^3, and the hypercube vertex catalog used by the standard
/// circuits. All types are immutable values; all functions are pure.

#pragma once

#include <array>
#include <cstddef>

#include "mesphase/types.hpp"

namespace mesphase {

/// Normalized pure state of two qubits. Amplitudes are stored in basis order
/// |00>, |01>, |10>, |11>.
///
/// Construction accepts a norm deviation up to 1e-9 and renormalizes, so a
/// stored state is always unit-norm to machine precision.
class TwoQubitState {
 public:
  /// Throws NotNormalized if the squared norm deviates from 1 by more than
  /// 1e-9, DomainError on non-finite input.
  explicit TwoQubitState(const std::array<Complex, 4>& amps);

  const std::array<Complex, 4>& amps() const noexcept { return amps_; }
  Complex amp(std::size_t index) const { return amps_[index]; }

 private:
  std::array<Complex, 4> amps_;
};

/// A point of S^3: the (a, b) pair of the canonical MES form
///   (a|00> + b|01> - b*|10> + a*|11>) / sqrt(2).
///
/// The sign is significant: (a, b) and (-a, -b) are distinct pairs that
/// project to the same SO(3) element. Keeping both is what makes the SU(2)
/// lift of a closed path carry its homotopy class.
class SpinorPair {
 public:
  /// Throws NotNormalized if |a|^2 + |b|^2 deviates from 1 by more than 1e-9.
  SpinorPair(Complex a, Complex b);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }

  SpinorPair negated() const noexcept;

 private:
  Complex a_;
  Complex b_;
};

/// Labels of the 16 hypercube vertices on S^3; the barred half are the
/// antipodes of the unbarred half.
enum class VertexLabel {
  A, B, C, D, E, F, G, H,
  Abar, Bbar, Cbar, Dbar, Ebar, Fbar, Gbar, Hbar,
};

inline constexpr std::array<VertexLabel, 16> kAllVertexLabels = {
    VertexLabel::A,    VertexLabel::B,    VertexLabel::C,    VertexLabel::D,
    VertexLabel::E,    VertexLabel::F,    VertexLabel::G,    VertexLabel::H,
    VertexLabel::Abar, VertexLabel::Bbar, VertexLabel::Cbar, VertexLabel::Dbar,
    VertexLabel::Ebar, VertexLabel::Fbar, VertexLabel::Gbar, VertexLabel::Hbar,
};

struct HypercubeVertex {
  VertexLabel label;
  SpinorPair pair;
};

/// Result of canonicalizing an MES: the extracted pair and the residual
/// global phase mu, chosen in (-pi/2, pi/2], such that exp(i*mu) times the
/// input state is exactly in canonical form.
struct CanonicalSpinor {
  SpinorPair pair;
  double residual_phase;
};

/// Builds a state from four amplitudes in |00>, |01>, |10>, |11> order.
TwoQubitState make_two_qubit(const std::array<Complex, 4>& amps);

/// The complex concurrence 2*(a00*a11 - a01*a10). Its modulus is the
/// pure-state concurrence: 1 for maximally entangled states, 0 for product
/// states.
Complex complex_concurrence(const TwoQubitState& state);

/// The MES with canonical amplitudes (a, b, -b*, a*) / sqrt(2).
TwoQubitState mes_from_spinor(const SpinorPair& pair);

/// Inverts mes_from_spinor up to global phase. Throws NotMaximallyEntangled
/// when the concurrence norm deviates from 1 by more than 1e-6.
CanonicalSpinor canonical_spinor(const TwoQubitState& state);

/// Hermitian inner product sum_i conj(s1_i) * s2_i.
Complex inner_product(const TwoQubitState& s1, const TwoQubitState& s2);

/// Catalog lookup. With eps = exp(i*pi/4)/sqrt(2), the unbarred pairs are
/// A (1,0), B (eps,eps), C (eps*,eps*), D (eps,-eps), E (eps*,-eps*),
/// F (i,0), G (0,1), H (0,i); barred labels negate the pair.
HypercubeVertex hypercube_vertex(VertexLabel label);

/// Convenience: the MES of a catalog vertex.
TwoQubitState vertex_state(VertexLabel label);

}  // namespace mesphase
