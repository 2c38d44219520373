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

#include "xdeficit/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "xdeficit/oracle.hpp"
#include "xdeficit/parallel.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit {

namespace {

struct Probe {
  double q1, q2, theta;
};

struct ProbeResult {
  double deviation = 0.0;
  double spread = 0.0;
};

constexpr std::array<double, 4> kAzimuths{0.0, 1.0, 2.0, 5.0};

}  // namespace

ValidationReport validate_closed_form(const ValidationOptions& opt) {
  if (opt.weight_steps < 2 || opt.theta_steps < 2 || opt.random_samples < 0) {
    throw DomainError("validate_closed_form: need at least 2 steps per axis");
  }
  std::vector<Probe> probes;
  const double wn = opt.weight_steps - 1;
  const double tn = opt.theta_steps - 1;
  for (int i = 0; i < opt.weight_steps; ++i) {
    for (int j = 0; i + j < opt.weight_steps; ++j) {
      for (int k = 0; k < opt.theta_steps; ++k) {
        probes.push_back({i / wn, j / wn, kHalfPi * k / tn});
      }
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < opt.random_samples; ++n) {
    double a = u(rng), b = u(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    probes.push_back({a, b, kHalfPi * u(rng)});
  }

  std::vector<ProbeResult> out(probes.size());
  parallel_for(static_cast<long>(probes.size()), [&](long n) {
    const Probe& pr = probes[n];
    const StateParams p(pr.q1, pr.q2);
    const double closed = post_entropy(p, pr.theta);
    double lo = INFINITY, hi = -INFINITY;
    for (double phi : kAzimuths) {
      const double s = oracle::oracle_post_entropy(p, pr.theta, phi);
      out[n].deviation = std::max(out[n].deviation, std::abs(s - closed));
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    out[n].spread = hi - lo;
  });

  ValidationReport rep;
  rep.evaluations = static_cast<long>(probes.size() * kAzimuths.size());
  for (std::size_t n = 0; n < probes.size(); ++n) {
    rep.max_azimuth_spread = std::max(rep.max_azimuth_spread, out[n].spread);
    if (out[n].deviation > rep.max_deviation) {
      rep.max_deviation = out[n].deviation;
      rep.worst_state = StateParams(probes[n].q1, probes[n].q2);
      rep.worst_theta = probes[n].theta;
    }
  }
  return rep;
}

}  // namespace xdeficit
