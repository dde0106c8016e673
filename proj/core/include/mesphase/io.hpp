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

/// Serialization of library values to JSON strings and CSV streams, plus the
/// corresponding parsers. All floating point output is rounded to 12
/// significant digits so repeated runs produce byte-identical files.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mesphase/evolution.hpp"
#include "mesphase/optics.hpp"
#include "mesphase/qstate.hpp"
#include "mesphase/topology.hpp"

namespace mesphase {

/// Rounds to 12 significant decimal digits; normalizes -0 to +0.
double round_for_output(double value) noexcept;

std::string vertex_label_to_string(VertexLabel label);
/// Accepts the strings vertex_label_to_string produces ("A".."H",
/// "Abar".."Hbar"). Throws UnknownLabelError otherwise.
VertexLabel vertex_label_from_string(std::string_view text);

std::string path_class_to_string(PathClass path_class);
std::string circuit_kind_to_string(CircuitKind kind);
/// "plus" or "minus"; throws UnknownLabelError otherwise.
CircuitKind circuit_kind_from_string(std::string_view text);

/// {"a": [re, im], "b": [re, im]}
std::string spinor_pair_to_json(const SpinorPair& pair);
/// {"amps": [[re, im] x4]} over the basis |00>, |01>, |10>, |11>.
std::string two_qubit_state_to_json(const TwoQubitState& state);

/// {"initial": {"a": ..., "b": ...}, "segments": [{"axis": [nx, ny, nz],
/// "duration": t, "qubit": 1|2}, ...]}
std::string trajectory_to_json(const Trajectory& trajectory);
/// Parses the same layout. "initial" defaults to (1, 0) when absent. Throws
/// DomainError on malformed JSON and the usual construction errors on bad
/// values.
Trajectory trajectory_from_json(const std::string& text);

/// {"closed": bool, "class": "plus"|"minus", "lift_endpoint": {...}}
std::string classification_to_json(bool closed, PathClass path_class,
                                   const SpinorPair& lift_endpoint);

/// {"psi": ..., "theta": ..., "delta": ...}
std::string plate_triple_to_json(const WavePlateTriple& plates);

/// {"theta": ..., "dynamical": ..., "geometric": ..., "total": ...}
std::string precession_to_json(double theta, const PhaseBreakdown& phases);

/// {"visibility": v, "overlap_abs": o}
std::string visibility_report_to_json(double visibility, double overlap_abs);

/// Uniform grid of `steps` values from start to stop inclusive (steps >= 1;
/// a single step yields just `start`). Throws DomainError otherwise.
std::vector<double> phi_grid(double start, double stop, int steps);

/// Parses {"placement": "folded"|"literal"|"reference", "trajectory":
/// Trajectory-JSON|null, "phi": {"start": a, "stop": b, "steps": n}}; the
/// phi object is expanded through phi_grid.
ExperimentConfig experiment_config_from_json(const std::string& text);

/// Header "time,re00,im00,re01,im01,re10,im10,re11,im11,overlap_re,
/// overlap_im,energy" then one row per sample.
void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

/// Header "phi,p_ab,p_ac" then one row per record.
void write_fringes_csv(std::ostream& out, const std::vector<FringeRecord>& records);

}  // namespace mesphase
