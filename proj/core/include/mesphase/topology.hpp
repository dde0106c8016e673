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

/// The SO(3) path layer. A trajectory of one-qubit rotations drags an MES
/// along a path in SO(3) = S^3 / {+1,-1}; lifting to S^3 keeps the sign that
/// the quotient discards. For a closed SO(3) path the lift ends at + or -
/// the initial pair, and that sign is the path's Z2 homotopy class.

#pragma once

#include "mesphase/evolution.hpp"
#include "mesphase/qstate.hpp"

namespace mesphase {

enum class PathClass { Plus, Minus };

enum class CircuitKind { Plus, Minus };

/// The two reference four-segment circuits. Both start at vertex A = (1, 0),
/// take 2*pi/3 per segment, rotate qubit 1 for the first two segments and
/// qubit 2 for the last two, and share the first half A -> B -> F. The plus
/// circuit continues F -> D -> A; the minus circuit F -> Ebar -> Abar.
Trajectory standard_circuit(CircuitKind kind);

/// Endpoint of the SU(2) lift: the canonical-form spinor of the final state,
/// sign preserved.
SpinorPair lift_endpoint(const Trajectory& trajectory);

/// Whether the path closes in SO(3), i.e. the lift endpoint equals the
/// initial pair up to sign (componentwise within 1e-9).
bool is_closed_so3(const Trajectory& trajectory);

/// Homotopy class of a closed trajectory: Plus when the lift returns to
/// +initial, Minus when it returns to -initial. Throws NotClosed otherwise.
PathClass classify(const Trajectory& trajectory);

}  // namespace mesphase
