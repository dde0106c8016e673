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

#include <benchmark/benchmark.h>

#include "mesphase/evolution.hpp"
#include "mesphase/io.hpp"
#include "mesphase/optics.hpp"
#include "mesphase/qstate.hpp"
#include "mesphase/topology.hpp"
#include "mesphase/types.hpp"

namespace mesphase {
namespace {

void BM_SegmentUnitary(benchmark::State& state) {
  const Axis axis(0.6, 0.0, 0.8);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segment_unitary(axis, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_SegmentUnitary);

void BM_ApplySegment(benchmark::State& state) {
  const TwoQubitState bell = vertex_state(VertexLabel::A);
  const Segment segment(Axis(0.6, 0.0, 0.8), 1.25, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_segment(bell, segment));
  }
}
BENCHMARK(BM_ApplySegment);

void BM_EvolvePath(benchmark::State& state) {
  const Trajectory circuit = standard_circuit(CircuitKind::Minus);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_path(circuit, samples));
  }
}
BENCHMARK(BM_EvolvePath)->Arg(64)->Arg(1024);

void BM_CrossingEvents(benchmark::State& state) {
  const EvolutionTrace trace =
      evolve_path(standard_circuit(CircuitKind::Minus), 1024);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossing_events(trace));
  }
}
BENCHMARK(BM_CrossingEvents);

void BM_CanonicalSpinor(benchmark::State& state) {
  const TwoQubitState mes = vertex_state(VertexLabel::B);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_spinor(mes));
  }
}
BENCHMARK(BM_CanonicalSpinor);

void BM_CompilePlates(benchmark::State& state) {
  const Axis axis(0.48, 0.6, 0.64);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile_plates(axis, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_CompilePlates);

void BM_RunExperimentFolded(benchmark::State& state) {
  const ExperimentConfig config{Placement::Folded,
                                standard_circuit(CircuitKind::Minus),
                                phi_grid(0.0, kTwoPi, 101)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(config));
  }
}
BENCHMARK(BM_RunExperimentFolded);

void BM_Classify(benchmark::State& state) {
  const Trajectory circuit = standard_circuit(CircuitKind::Minus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(circuit));
  }
}
BENCHMARK(BM_Classify);

}  // namespace
}  // namespace mesphase

BENCHMARK_MAIN();
