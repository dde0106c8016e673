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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mesphase/errors.hpp"
#include "mesphase/evolution.hpp"
#include "mesphase/io.hpp"
#include "mesphase/optics.hpp"
#include "mesphase/qstate.hpp"
#include "mesphase/topology.hpp"
#include "mesphase/types.hpp"

namespace mesphase::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad argument values detected before dispatching into the library; they map
// to exit code 2 rather than the library errors' 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) throw UsageError("cannot read file '" + path + "'");
  return contents.str();
}

// "plus", "minus", or a path to a trajectory JSON file. File problems and
// malformed contents count as usage errors.
Trajectory resolve_circuit(const std::string& choice) {
  if (choice == "plus") return standard_circuit(CircuitKind::Plus);
  if (choice == "minus") return standard_circuit(CircuitKind::Minus);
  const std::string text = read_file(choice);
  try {
    return trajectory_from_json(text);
  } catch (const Error& e) {
    throw UsageError("invalid trajectory in '" + choice + "': " + e.what());
  }
}

void write_csv_file(const std::string& path,
                    const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot open '" + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw Error("IoError", "failed writing '" + path + "'");
}

Json rounded_array(const std::vector<double>& values) {
  Json array = Json::array();
  for (double v : values) array.push_back(round_for_output(v));
  return array;
}

int do_vertices(std::ostream& out) {
  Json list = Json::array();
  for (VertexLabel label : kAllVertexLabels) {
    const HypercubeVertex vertex = hypercube_vertex(label);
    Json entry;
    entry["label"] = vertex_label_to_string(label);
    entry["pair"] = Json::parse(spinor_pair_to_json(vertex.pair));
    entry["state"] = Json::parse(two_qubit_state_to_json(vertex_state(label)));
    list.push_back(entry);
  }
  out << Json{{"vertices", list}}.dump() << '\n';
  return 0;
}

int do_evolve(const std::string& circuit, int samples, const std::string& output,
              std::ostream& out) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const Trajectory trajectory = resolve_circuit(circuit);
  const EvolutionTrace trace = evolve_path(trajectory, samples);

  Json report;
  report["trajectory"] = Json::parse(trajectory_to_json(trajectory));
  report["samples_per_segment"] = samples;
  const Complex final_overlap = trace.overlaps.back();
  report["final_overlap"] = Json::array({round_for_output(final_overlap.real()),
                                         round_for_output(final_overlap.imag())});
  const bool closed = is_closed_so3(trajectory);
  report["closed"] = closed;
  if (closed) {
    report["class"] = path_class_to_string(classify(trajectory));
  } else {
    report["class"] = nullptr;
  }
  report["lift_endpoint"] = Json::parse(spinor_pair_to_json(lift_endpoint(trajectory)));
  report["dynamical_phase"] = round_for_output(dynamical_phase(trace));
  try {
    report["pancharatnam_phase"] = round_for_output(
        pancharatnam_phase(trace.states.front(), trace.states.back()));
  } catch (const OrthogonalStatesError&) {
    report["pancharatnam_phase"] = nullptr;
  }
  const CrossingReport crossings = crossing_events(trace);
  report["crossings"] = rounded_array(crossings.crossings);
  report["tangential_contacts"] = rounded_array(crossings.tangential_contacts);
  report["crossing_parity"] = crossings.parity;
  out << report.dump() << '\n';

  if (!output.empty()) {
    write_csv_file(output, [&](std::ostream& file) { write_trace_csv(file, trace); });
  }
  return 0;
}

int do_classify(const std::string& file, std::ostream& out) {
  const std::string text = read_file(file);
  Trajectory trajectory{SpinorPair(1.0, 0.0), {}};
  try {
    trajectory = trajectory_from_json(text);
  } catch (const Error& e) {
    throw UsageError("invalid trajectory in '" + file + "': " + e.what());
  }
  const PathClass path_class = classify(trajectory);  // NotClosed -> exit 1
  out << classification_to_json(true, path_class, lift_endpoint(trajectory)) << '\n';
  return 0;
}

int do_fringes(const std::string& placement_text, const std::string& circuit,
               int phi_steps, const std::string& output, std::ostream& out) {
  Placement placement;
  if (placement_text == "reference") {
    placement = Placement::Reference;
  } else if (placement_text == "folded") {
    placement = Placement::Folded;
  } else if (placement_text == "literal") {
    placement = Placement::Literal;
  } else {
    throw UsageError("--placement must be reference, folded, or literal");
  }
  if (phi_steps < 8) throw UsageError("--phi-steps must be at least 8");

  std::optional<Trajectory> trajectory;
  if (placement != Placement::Reference) {
    if (circuit.empty()) {
      throw UsageError("--circuit is required for folded and literal placements");
    }
    trajectory = resolve_circuit(circuit);
  }

  const ExperimentConfig config{placement, trajectory, phi_grid(0.0, kTwoPi, phi_steps)};
  const std::vector<FringeRecord> records = run_experiment(config);
  const double vis = visibility(records);

  // |<source MES|final MES>| for the trajectory's operator schedule launched
  // from the optical source (vertex A); 1 when there are no plates.
  double overlap_abs = 1.0;
  if (trajectory.has_value()) {
    const TwoQubitState source = vertex_state(VertexLabel::A);
    TwoQubitState final_state = source;
    for (const Segment& segment : trajectory->segments) {
      final_state = apply_segment(final_state, segment);
    }
    overlap_abs = std::abs(inner_product(source, final_state));
  }

  Json report;
  report["placement"] = placement_text;
  if (placement == Placement::Reference) {
    report["circuit"] = nullptr;
  } else {
    report["circuit"] = circuit;
  }
  report["phi_steps"] = phi_steps;
  report["report"] = Json::parse(visibility_report_to_json(vis, overlap_abs));
  Json rows = Json::array();
  for (const FringeRecord& r : records) {
    rows.push_back(Json{{"phi", round_for_output(r.phi)},
                        {"p_ab", round_for_output(r.p_coincidence_ab)},
                        {"p_ac", round_for_output(r.p_coincidence_ac)}});
  }
  report["records"] = rows;
  out << report.dump() << '\n';

  if (!output.empty()) {
    write_csv_file(output,
                   [&](std::ostream& file) { write_fringes_csv(file, records); });
  }
  return 0;
}

int do_compile_plates(const std::string& axis_text, double time, std::ostream& out) {
  std::array<double, 3> n{};
  std::istringstream parts(axis_text);
  std::string token;
  std::size_t count = 0;
  while (std::getline(parts, token, ',')) {
    if (count >= 3) throw UsageError("--axis needs exactly three components");
    std::size_t used = 0;
    try {
      n[count] = std::stod(token, &used);
    } catch (const std::exception&) {
      throw UsageError("--axis component '" + token + "' is not a number");
    }
    if (used != token.size()) {
      throw UsageError("--axis component '" + token + "' is not a number");
    }
    ++count;
  }
  if (count != 3) throw UsageError("--axis needs exactly three components");
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kAxisInputTol) {
    throw UsageError("--axis must be a unit vector");
  }
  if (!std::isfinite(time)) throw UsageError("--time must be finite");

  const WavePlateTriple triple = compile_plates(Axis(n[0], n[1], n[2]), time);
  out << plate_triple_to_json(triple) << '\n';
  return 0;
}

int do_precession(double theta, int steps, std::ostream& out) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    throw UsageError("--theta must lie in [0, pi]");
  }
  if (steps < 1000) throw UsageError("--steps must be at least 1000");
  const PhaseBreakdown phases = precession_demo(theta, steps);
  out << precession_to_json(theta, phases) << '\n';
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit maximally entangled states on SO(3): path classes,"
               " phases, and photon-pair interference"};
  app.name("mesphase");
  app.require_subcommand(1);

  CLI::App* cmd_vertices =
      app.add_subcommand("vertices", "Print the hypercube vertex catalog");

  std::string evolve_circuit;
  int evolve_samples = 1024;
  std::string evolve_output;
  CLI::App* cmd_evolve = app.add_subcommand(
      "evolve", "Sample a trajectory; report phases, crossings, and class");
  cmd_evolve->add_option("--circuit", evolve_circuit,
                         "plus, minus, or a trajectory JSON file")
      ->required();
  cmd_evolve->add_option("--samples", evolve_samples,
                         "Samples per segment (default 1024)");
  cmd_evolve->add_option("--output", evolve_output, "Write the trace CSV here");

  std::string classify_file;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Homotopy class of a closed trajectory");
  cmd_classify->add_option("--file", classify_file, "Trajectory JSON file")->required();

  std::string fringes_placement;
  std::string fringes_circuit;
  int fringes_steps = 101;
  std::string fringes_output;
  CLI::App* cmd_fringes = app.add_subcommand(
      "fringes", "Coincidence fringes of the Mach-Zehnder photon-pair run");
  cmd_fringes->add_option("--placement", fringes_placement,
                          "reference, folded, or literal")
      ->required();
  cmd_fringes->add_option("--circuit", fringes_circuit,
                          "plus, minus, or a trajectory JSON file");
  cmd_fringes->add_option("--phi-steps", fringes_steps,
                          "Grid points over [0, 2pi] (default 101)");
  cmd_fringes->add_option("--output", fringes_output, "Write the fringe CSV here");

  std::string plates_axis;
  double plates_time = 0.0;
  CLI::App* cmd_plates = app.add_subcommand(
      "compile-plates", "Wave-plate settings realizing a rotation");
  cmd_plates->add_option("--axis", plates_axis, "Rotation axis as nx,ny,nz")->required();
  cmd_plates->add_option("--time", plates_time, "Rotation time (radians)")->required();

  double precession_theta = 0.0;
  int precession_steps = 10000;
  CLI::App* cmd_precession = app.add_subcommand(
      "precession", "Phase decomposition of one spin precession period");
  cmd_precession->add_option("--theta", precession_theta, "Cone angle in [0, pi]")
      ->required();
  cmd_precession->add_option("--steps", precession_steps,
                             "Time steps over the period (default 10000)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.get_name() << ": " << e.what() << '\n';
    return 2;
  }

  try {
    if (cmd_vertices->parsed()) return do_vertices(out);
    if (cmd_evolve->parsed()) {
      return do_evolve(evolve_circuit, evolve_samples, evolve_output, out);
    }
    if (cmd_classify->parsed()) return do_classify(classify_file, out);
    if (cmd_fringes->parsed()) {
      return do_fringes(fringes_placement, fringes_circuit, fringes_steps,
                        fringes_output, out);
    }
    if (cmd_plates->parsed()) return do_compile_plates(plates_axis, plates_time, out);
    if (cmd_precession->parsed()) {
      return do_precession(precession_theta, precession_steps, out);
    }
    err << "no command given\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace mesphase::cli
