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

// Cross-check of the closed-form post-measurement entropy against the
// dense-matrix oracle.

#ifndef XDEFICIT_VALIDATION_HPP
#define XDEFICIT_VALIDATION_HPP

#include <cstdint>

#include "xdeficit/state.hpp"

namespace xdeficit {

struct ValidationOptions {
  int weight_steps = 30;  // per axis of (q1, q2), inclusive endpoints
  int theta_steps = 8;    // over [0, pi/2], inclusive endpoints
  int random_samples = 0; // extra (q1, q2, theta) draws
  std::uint64_t seed = 42;
};

struct ValidationReport {
  long evaluations = 0;
  double max_deviation = 0.0;
  /// Largest spread of the oracle over the azimuths at fixed (q1, q2, theta).
  double max_azimuth_spread = 0.0;
  StateParams worst_state{0.0, 0.0};
  double worst_theta = 0.0;
};

/// Every grid point is evaluated at azimuths {0, 1, 2, 5}.
ValidationReport validate_closed_form(const ValidationOptions& opt = {});

}  // namespace xdeficit

#endif  // XDEFICIT_VALIDATION_HPP
