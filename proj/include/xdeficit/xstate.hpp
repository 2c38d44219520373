// Copyright 2026 The xdeficit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form scalar mathematics of the two-parameter X-state family.
//
// Entropies are reported in bits. The endpoint curvature diagnostics are
// evaluated in natural-log units; only their sign and zero set are used.

#ifndef XDEFICIT_XSTATE_HPP
#define XDEFICIT_XSTATE_HPP

#include <array>
#include <optional>
#include <span>

#include "xdeficit/state.hpp"

namespace xdeficit {

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// -sum x_i log2 x_i. Entries in [-1e-12, 0) are clamped to zero; the sum
/// must be 1 within 1e-10.
double quaternary_entropy(std::span<const double, 4> x);
double quaternary_entropy(double x1, double x2, double x3, double x4);

/// Von Neumann entropy of rho, in bits.
double pre_entropy(const StateParams& p);

/// Eigenvalues of the measured state for polar angle theta on qubit B.
struct PostSpectrum {
  std::array<double, 4> lambda;
  double theta;
};

/// The four eigenvalues in the order (+, -) for the cos(theta) pair then
/// (+, -) for the -cos(theta) pair. The smaller member of each pair is
/// taken from the pair product, which has a cancellation-free form, so
/// small eigenvalues keep full relative precision.
///
/// Accepts any theta; the spectrum is even in theta and symmetric under
/// theta -> pi - theta (with the pairs exchanged).
PostSpectrum post_spectrum(const StateParams& p, double theta) noexcept;

/// Entropy of the measured state, in bits.
double post_entropy(const StateParams& p, double theta);

/// Analytic d/dtheta of post_entropy, in bits per radian.
double post_entropy_slope(const StateParams& p, double theta);

/// Post-measurement entropy at theta = 0, closed form.
double endpoint_entropy_zero(const StateParams& p);

/// Post-measurement entropy at theta = pi/2, closed form.
double endpoint_entropy_halfpi(const StateParams& p);

/// sqrt((1 - q1 - q2)^2 + (q1 - q2)^2).
double aux_radius(const StateParams& p) noexcept;

/// Second derivative of the post-measurement entropy at theta = pi/2, in
/// nats. Empty when the radius is within 1e-9 of 0 or 1.
std::optional<double> s2_halfpi(const StateParams& p);

/// Second derivative at theta = 0 for a state on an axis (q1 q2 = 0),
/// written in terms of the non-zero weight q, in nats. The removable
/// singularity at q = 2/3 is handled. Requires q in (0, 1].
double s2_zero_on_axis(double q);

struct EndpointDiagnostics {
  double r;
  /// Empty for degenerate radius.
  std::optional<double> s2_halfpi;
  /// Empty off the axes, where the curvature at theta = 0 diverges.
  std::optional<double> s2_zero_axis;
};

EndpointDiagnostics endpoint_diagnostics(const StateParams& p);

/// Fidelity between two family members. They commute, so this reduces to
/// the classical overlap of the spectra.
double family_fidelity(const StateParams& a, const StateParams& b);

}  // namespace xdeficit

#endif  // XDEFICIT_XSTATE_HPP
