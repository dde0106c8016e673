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

#pragma once

#include <complex>
#include <numbers>

namespace mesphase {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance accepted on user-supplied normalization (states, spinor pairs).
inline constexpr double kNormInputTol = 1e-9;

/// Tolerance accepted on user-supplied rotation axes.
inline constexpr double kAxisInputTol = 1e-6;

/// Concurrence-norm tolerance below which a state counts as maximally
/// entangled.
inline constexpr double kMesTol = 1e-6;

/// Componentwise tolerance for SO(3)-closure and class decisions.
inline constexpr double kClosureTol = 1e-9;

/// Overlap magnitude below which the Pancharatnam phase is undefined.
inline constexpr double kOrthogonalTol = 1e-9;

/// Wraps an angle into (-pi, pi]. An exact -pi maps to +pi so that a phase
/// gain of pi has a single representation.
double wrap_angle(double angle);

}  // namespace mesphase
