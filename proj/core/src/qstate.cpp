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

#include "mesphase/qstate.hpp"

#include <cmath>
#include <cstdio>

#include "mesphase/errors.hpp"
#include "mesphase/types.hpp"

namespace mesphase {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool all_finite(const std::array<Complex, 4>& amps) {
  for (const Complex& c : amps) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

std::string norm_message(const char* what, double norm_sq) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s has squared norm %.17g, expected 1", what, norm_sq);
  return buf;
}

}  // namespace

double wrap_angle(double angle) {
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -kPi) wrapped = kPi;  // remainder can return exactly -pi
  return wrapped;
}

TwoQubitState::TwoQubitState(const std::array<Complex, 4>& amps) : amps_(amps) {
  if (!all_finite(amps_)) throw DomainError("state amplitude is not finite");
  double norm_sq = 0.0;
  for (const Complex& c : amps_) norm_sq += std::norm(c);
  if (std::abs(norm_sq - 1.0) > kNormInputTol) {
    throw NotNormalizedError(norm_message("state", norm_sq));
  }
  const double norm = std::sqrt(norm_sq);
  if (norm != 1.0) {
    for (Complex& c : amps_) c /= norm;
  }
}

SpinorPair::SpinorPair(Complex a, Complex b) : a_(a), b_(b) {
  if (!std::isfinite(a_.real()) || !std::isfinite(a_.imag()) ||
      !std::isfinite(b_.real()) || !std::isfinite(b_.imag())) {
    throw DomainError("spinor component is not finite");
  }
  const double norm_sq = std::norm(a_) + std::norm(b_);
  if (std::abs(norm_sq - 1.0) > kNormInputTol) {
    throw NotNormalizedError(norm_message("spinor pair", norm_sq));
  }
  const double norm = std::sqrt(norm_sq);
  if (norm != 1.0) {
    a_ /= norm;
    b_ /= norm;
  }
}

SpinorPair SpinorPair::negated() const noexcept {
  SpinorPair copy = *this;
  copy.a_ = -copy.a_;
  copy.b_ = -copy.b_;
  return copy;
}

TwoQubitState make_two_qubit(const std::array<Complex, 4>& amps) {
  return TwoQubitState(amps);
}

Complex complex_concurrence(const TwoQubitState& state) {
  const auto& a = state.amps();
  return 2.0 * (a[0] * a[3] - a[1] * a[2]);
}

TwoQubitState mes_from_spinor(const SpinorPair& pair) {
  const Complex a = pair.a() * kInvSqrt2;
  const Complex b = pair.b() * kInvSqrt2;
  return TwoQubitState({a, b, -std::conj(b), std::conj(a)});
}

CanonicalSpinor canonical_spinor(const TwoQubitState& state) {
  const Complex concurrence = complex_concurrence(state);
  if (std::abs(std::abs(concurrence) - 1.0) > kMesTol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "concurrence norm is %.17g, expected 1",
                  std::abs(concurrence));
    throw NotMaximallyEntangledError(buf);
  }
  // arg on the [-pi, pi) branch keeps mu inside (-pi/2, pi/2], so fixing the
  // phase never flips the sign of the extracted pair.
  double arg = std::arg(concurrence);
  if (arg >= kPi) arg -= kTwoPi;
  const double mu = -arg / 2.0;
  const Complex phase = std::polar(1.0, mu);

  const auto& amps = state.amps();
  const Complex a00 = phase * amps[0];
  const Complex a01 = phase * amps[1];
  const Complex a10 = phase * amps[2];
  const Complex a11 = phase * amps[3];
  // In exact canonical form a = sqrt(2)*a00 = sqrt(2)*conj(a11); averaging
  // the two estimates (and likewise for b) splits any residual defect.
  Complex a = (a00 + std::conj(a11)) * kInvSqrt2;
  Complex b = (a01 - std::conj(a10)) * kInvSqrt2;
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  return CanonicalSpinor{SpinorPair(a, b), mu};
}

Complex inner_product(const TwoQubitState& s1, const TwoQubitState& s2) {
  const auto& p = s1.amps();
  const auto& q = s2.amps();
  const Complex t0 = std::conj(p[0]) * q[0];
  const Complex t1 = std::conj(p[1]) * q[1];
  const Complex t2 = std::conj(p[2]) * q[2];
  const Complex t3 = std::conj(p[3]) * q[3];
  // Pairing the outer and inner terms keeps the overlap of two canonical MES
  // exactly real: t3 is the exact conjugate of t0 and t2 of t1.
  return (t0 + t3) + (t1 + t2);
}

HypercubeVertex hypercube_vertex(VertexLabel label) {
  const Complex eps(0.5, 0.5);
  const Complex eps_conj(0.5, -0.5);
  SpinorPair pair(1.0, 0.0);
  bool barred = false;
  VertexLabel base = label;
  switch (label) {
    case VertexLabel::Abar: base = VertexLabel::A; barred = true; break;
    case VertexLabel::Bbar: base = VertexLabel::B; barred = true; break;
    case VertexLabel::Cbar: base = VertexLabel::C; barred = true; break;
    case VertexLabel::Dbar: base = VertexLabel::D; barred = true; break;
    case VertexLabel::Ebar: base = VertexLabel::E; barred = true; break;
    case VertexLabel::Fbar: base = VertexLabel::F; barred = true; break;
    case VertexLabel::Gbar: base = VertexLabel::G; barred = true; break;
    case VertexLabel::Hbar: base = VertexLabel::H; barred = true; break;
    default: break;
  }
  switch (base) {
    case VertexLabel::A: pair = SpinorPair(1.0, 0.0); break;
    case VertexLabel::B: pair = SpinorPair(eps, eps); break;
    case VertexLabel::C: pair = SpinorPair(eps_conj, eps_conj); break;
    case VertexLabel::D: pair = SpinorPair(eps, -eps); break;
    case VertexLabel::E: pair = SpinorPair(eps_conj, -eps_conj); break;
    case VertexLabel::F: pair = SpinorPair(Complex(0.0, 1.0), 0.0); break;
    case VertexLabel::G: pair = SpinorPair(0.0, 1.0); break;
    case VertexLabel::H: pair = SpinorPair(0.0, Complex(0.0, 1.0)); break;
    default:
      throw UnknownLabelError("vertex label out of range");
  }
  if (barred) pair = pair.negated();
  return HypercubeVertex{label, pair};
}

TwoQubitState vertex_state(VertexLabel label) {
  return mes_from_spinor(hypercube_vertex(label).pair);
}

}  // namespace mesphase
