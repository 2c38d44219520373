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

#include "xdeficit/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xdeficit {

StateParams::StateParams(double q1, double q2) {
  if (!std::isfinite(q1) || !std::isfinite(q2)) {
    throw DomainError("state weights must be finite");
  }
  if (q1 < -kEdgeTolerance || q2 < -kEdgeTolerance || q1 + q2 > 1.0 + kEdgeTolerance) {
    std::ostringstream os;
    os << "state (" << q1 << ", " << q2
       << ") is outside the triangle q1 >= 0, q2 >= 0, q1 + q2 <= 1";
    throw DomainError(os.str());
  }
  q1_ = std::max(q1, 0.0);
  q2_ = std::max(q2, 0.0);
}

double StateParams::rest() const noexcept {
  return std::max(0.0, 1.0 - q1_ - q2_);
}

std::string to_string(const StateParams& p) {
  std::ostringstream os;
  os.precision(9);
  os << "(" << p.q1() << ", " << p.q2() << ")";
  return os.str();
}

FamilySpectrum family_spectrum(const StateParams& p) noexcept {
  return FamilySpectrum{{p.rest(), p.q1(), p.q2(), 0.0}};
}

}  // namespace xdeficit
