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

#include "mesphase/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

#include "mesphase/errors.hpp"

namespace mesphase {

namespace {

using Json = nlohmann::ordered_json;

// Fixed-format rendering behind both the JSON and CSV writers, so identical
// inputs always produce identical bytes.
std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

Json complex_json(const Complex& z) {
  return Json::array({round_for_output(z.real()), round_for_output(z.imag())});
}

Json spinor_json(const SpinorPair& pair) {
  return Json{{"a", complex_json(pair.a())}, {"b", complex_json(pair.b())}};
}

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw DomainError("complex value must be a [re, im] array");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

double round_for_output(double value) noexcept {
  if (value == 0.0) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string vertex_label_to_string(VertexLabel label) {
  switch (label) {
    case VertexLabel::A: return "A";
    case VertexLabel::B: return "B";
    case VertexLabel::C: return "C";
    case VertexLabel::D: return "D";
    case VertexLabel::E: return "E";
    case VertexLabel::F: return "F";
    case VertexLabel::G: return "G";
    case VertexLabel::H: return "H";
    case VertexLabel::Abar: return "Abar";
    case VertexLabel::Bbar: return "Bbar";
    case VertexLabel::Cbar: return "Cbar";
    case VertexLabel::Dbar: return "Dbar";
    case VertexLabel::Ebar: return "Ebar";
    case VertexLabel::Fbar: return "Fbar";
    case VertexLabel::Gbar: return "Gbar";
    case VertexLabel::Hbar: return "Hbar";
  }
  throw UnknownLabelError("vertex label out of range");
}

VertexLabel vertex_label_from_string(std::string_view text) {
  for (VertexLabel label : kAllVertexLabels) {
    if (vertex_label_to_string(label) == text) return label;
  }
  throw UnknownLabelError("unknown vertex label '" + std::string(text) + "'");
}

std::string path_class_to_string(PathClass path_class) {
  return path_class == PathClass::Plus ? "plus" : "minus";
}

std::string circuit_kind_to_string(CircuitKind kind) {
  return kind == CircuitKind::Plus ? "plus" : "minus";
}

CircuitKind circuit_kind_from_string(std::string_view text) {
  if (text == "plus") return CircuitKind::Plus;
  if (text == "minus") return CircuitKind::Minus;
  throw UnknownLabelError("unknown circuit '" + std::string(text) + "'");
}

std::string spinor_pair_to_json(const SpinorPair& pair) {
  return spinor_json(pair).dump();
}

std::string two_qubit_state_to_json(const TwoQubitState& state) {
  Json amps = Json::array();
  for (const Complex& c : state.amps()) amps.push_back(complex_json(c));
  return Json{{"amps", amps}}.dump();
}

std::string trajectory_to_json(const Trajectory& trajectory) {
  Json segments = Json::array();
  for (const Segment& segment : trajectory.segments) {
    segments.push_back(
        Json{{"axis", Json::array({round_for_output(segment.axis.nx()),
                                   round_for_output(segment.axis.ny()),
                                   round_for_output(segment.axis.nz())})},
             {"duration", round_for_output(segment.duration)},
             {"qubit", segment.qubit}});
  }
  return Json{{"initial", spinor_json(trajectory.initial)}, {"segments", segments}}
      .dump();
}

Trajectory trajectory_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("trajectory JSON is malformed: ") + e.what());
  }
  try {
    SpinorPair initial(1.0, 0.0);
    if (j.contains("initial") && !j.at("initial").is_null()) {
      const Json& init = j.at("initial");
      initial = SpinorPair(complex_from(init.at("a")), complex_from(init.at("b")));
    }
    Trajectory trajectory{initial, {}};
    for (const Json& seg : j.at("segments")) {
      const Json& axis = seg.at("axis");
      if (!axis.is_array() || axis.size() != 3) {
        throw DomainError("segment axis must be a [nx, ny, nz] array");
      }
      trajectory.segments.emplace_back(
          Axis(axis[0].get<double>(), axis[1].get<double>(), axis[2].get<double>()),
          seg.at("duration").get<double>(), seg.at("qubit").get<int>());
    }
    return trajectory;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("trajectory JSON has bad structure: ") + e.what());
  }
}

std::string classification_to_json(bool closed, PathClass path_class,
                                   const SpinorPair& lift_endpoint) {
  return Json{{"closed", closed},
              {"class", path_class_to_string(path_class)},
              {"lift_endpoint", spinor_json(lift_endpoint)}}
      .dump();
}

std::string plate_triple_to_json(const WavePlateTriple& plates) {
  return Json{{"psi", round_for_output(plates.psi)},
              {"theta", round_for_output(plates.theta)},
              {"delta", round_for_output(plates.delta)}}
      .dump();
}

std::string precession_to_json(double theta, const PhaseBreakdown& phases) {
  return Json{{"theta", round_for_output(theta)},
              {"dynamical", round_for_output(phases.dynamical)},
              {"geometric", round_for_output(phases.geometric)},
              {"total", round_for_output(phases.total)}}
      .dump();
}

std::string visibility_report_to_json(double visibility, double overlap_abs) {
  return Json{{"visibility", round_for_output(visibility)},
              {"overlap_abs", round_for_output(overlap_abs)}}
      .dump();
}

std::vector<double> phi_grid(double start, double stop, int steps) {
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw DomainError("phi bounds must be finite");
  }
  if (steps < 1) throw DomainError("phi grid needs at least one step");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    values.push_back(start);
    return values;
  }
  for (int k = 0; k < steps; ++k) {
    values.push_back(start + (stop - start) * k / (steps - 1));
  }
  return values;
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("experiment JSON is malformed: ") + e.what());
  }
  try {
    const std::string placement_text = j.at("placement").get<std::string>();
    Placement placement;
    if (placement_text == "folded") {
      placement = Placement::Folded;
    } else if (placement_text == "literal") {
      placement = Placement::Literal;
    } else if (placement_text == "reference") {
      placement = Placement::Reference;
    } else {
      throw UnknownLabelError("unknown placement '" + placement_text + "'");
    }
    std::optional<Trajectory> trajectory;
    if (j.contains("trajectory") && !j.at("trajectory").is_null()) {
      trajectory = trajectory_from_json(j.at("trajectory").dump());
    }
    const Json& phi = j.at("phi");
    std::vector<double> values = phi_grid(phi.at("start").get<double>(),
                                          phi.at("stop").get<double>(),
                                          phi.at("steps").get<int>());
    return ExperimentConfig{placement, std::move(trajectory), std::move(values)};
  } catch (const Json::exception& e) {
    throw DomainError(std::string("experiment JSON has bad structure: ") + e.what());
  }
}

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace) {
  out << "time,re00,im00,re01,im01,re10,im10,re11,im11,overlap_re,overlap_im,energy\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    const auto& amps = trace.states[i].amps();
    out << format_number(trace.times[i]);
    for (const Complex& c : amps) {
      out << ',' << format_number(c.real()) << ',' << format_number(c.imag());
    }
    out << ',' << format_number(trace.overlaps[i].real()) << ','
        << format_number(trace.overlaps[i].imag()) << ','
        << format_number(trace.energies[i]) << '\n';
  }
}

void write_fringes_csv(std::ostream& out, const std::vector<FringeRecord>& records) {
  out << "phi,p_ab,p_ac\n";
  for (const FringeRecord& r : records) {
    out << format_number(r.phi) << ',' << format_number(r.p_coincidence_ab) << ','
        << format_number(r.p_coincidence_ac) << '\n';
  }
}

}  // namespace mesphase
