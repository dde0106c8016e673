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

#include "mesphase/topology.hpp"

#include <cmath>

#include "mesphase/errors.hpp"

namespace mesphase {

namespace {

bool pairs_close(const SpinorPair& p, const SpinorPair& q) {
  return std::abs(p.a().real() - q.a().real()) <= kClosureTol &&
         std::abs(p.a().imag() - q.a().imag()) <= kClosureTol &&
         std::abs(p.b().real() - q.b().real()) <= kClosureTol &&
         std::abs(p.b().imag() - q.b().imag()) <= kClosureTol;
}

}  // namespace

Trajectory standard_circuit(CircuitKind kind) {
  const double r = std::sqrt(1.0 / 3.0);
  const double t = kTwoPi / 3.0;
  Trajectory trajectory{SpinorPair(1.0, 0.0), {}};
  trajectory.segments.emplace_back(Axis(-r, -r, -r), t, 1);
  trajectory.segments.emplace_back(Axis(r, -r, -r), t, 1);
  if (kind == CircuitKind::Plus) {
    trajectory.segments.emplace_back(Axis(-r, -r, r), t, 2);
    trajectory.segments.emplace_back(Axis(-r, r, r), t, 2);
  } else {
    trajectory.segments.emplace_back(Axis(r, -r, -r), t, 2);
    trajectory.segments.emplace_back(Axis(r, r, -r), t, 2);
  }
  return trajectory;
}

SpinorPair lift_endpoint(const Trajectory& trajectory) {
  TwoQubitState state = mes_from_spinor(trajectory.initial);
  for (const Segment& segment : trajectory.segments) {
    state = apply_segment(state, segment);
  }
  return canonical_spinor(state).pair;
}

bool is_closed_so3(const Trajectory& trajectory) {
  const SpinorPair end = lift_endpoint(trajectory);
  return pairs_close(end, trajectory.initial) ||
         pairs_close(end, trajectory.initial.negated());
}

PathClass classify(const Trajectory& trajectory) {
  const SpinorPair end = lift_endpoint(trajectory);
  if (pairs_close(end, trajectory.initial)) return PathClass::Plus;
  if (pairs_close(end, trajectory.initial.negated())) return PathClass::Minus;
  throw NotClosedError("trajectory endpoint differs from +/- the initial pair");
}

}  // namespace mesphase
