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

#ifndef XDEFICIT_STATE_HPP
#define XDEFICIT_STATE_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace xdeficit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

/// Raised when an argument lies outside the domain of a function, e.g. a
/// mixture weight outside the triangle or a probability outside [0, 1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mixture weights of the state
///
///   rho = q1 |Psi+><Psi+| + q2 |Psi-><Psi-| + (1 - q1 - q2) |00><00|
///
/// restricted to the triangle q1 >= 0, q2 >= 0, q1 + q2 <= 1. Violations
/// smaller than kEdgeTolerance are snapped onto the edge; anything larger
/// throws DomainError.
class StateParams {
 public:
  static constexpr double kEdgeTolerance = 1e-12;

  StateParams(double q1, double q2);

  double q1() const noexcept { return q1_; }
  double q2() const noexcept { return q2_; }
  /// q1 + q2.
  double total() const noexcept { return q1_ + q2_; }
  /// Weight of |00>, never negative.
  double rest() const noexcept;

  /// The state with q1 and q2 exchanged.
  StateParams swapped() const noexcept { return StateParams(q2_, q1_, Unchecked{}); }

  bool on_axis() const noexcept { return q1_ == 0.0 || q2_ == 0.0; }

  friend bool operator==(const StateParams&, const StateParams&) = default;

 private:
  struct Unchecked {};
  StateParams(double q1, double q2, Unchecked) noexcept : q1_(q1), q2_(q2) {}

  double q1_;
  double q2_;
};

std::string to_string(const StateParams& p);

/// Eigenvalues of rho, ordered (|00> weight, q1, q2, 0).
struct FamilySpectrum {
  std::array<double, 4> lambda;
};

FamilySpectrum family_spectrum(const StateParams& p) noexcept;

}  // namespace xdeficit

#endif  // XDEFICIT_STATE_HPP
