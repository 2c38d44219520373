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

#include "xdeficit/deficit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "xdeficit/xstate.hpp"

namespace xdeficit {
namespace {

struct Candidate {
  Branch branch;
  double value;
  double theta;
};

DeficitResult endpoint_choice(double delta_zero, double delta_halfpi) {
  DeficitResult r;
  r.tie = std::abs(delta_zero - delta_halfpi) < kTieTolerance;
  r.delta = std::min(delta_zero, delta_halfpi);
  if (r.tie || delta_zero <= delta_halfpi) {
    r.branch = Branch::AtZero;
    r.optimal_theta = 0.0;
  } else {
    r.branch = Branch::AtHalfPi;
    r.optimal_theta = kHalfPi;
  }
  return r;
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::AtZero: return "AtZero";
    case Branch::Interior: return "Interior";
    case Branch::AtHalfPi: return "AtHalfPi";
  }
  return "?";
}

BranchValues branch_values(const StateParams& p, const ShapeOptions& options) {
  const double s = pre_entropy(p);
  BranchValues v{endpoint_entropy_zero(p) - s, endpoint_entropy_halfpi(p) - s, std::nullopt};
  if (auto m = interior_minimum(p, options)) {
    v.interior = InteriorMinimum{m->vartheta, m->value - s};
  }
  return v;
}

DeficitResult pick_branch(const BranchValues& values) {
  // Preference order for ties.
  std::array<Candidate, 3> cands{{{Branch::AtZero, values.delta_zero, 0.0},
                                  {Branch::AtHalfPi, values.delta_halfpi, kHalfPi},
                                  {Branch::Interior, 0.0, 0.0}}};
  std::size_t count = 2;
  if (values.interior) {
    cands[2] = {Branch::Interior, values.interior->value, values.interior->vartheta};
    count = 3;
  }
  double best = cands[0].value;
  for (std::size_t i = 1; i < count; ++i) best = std::min(best, cands[i].value);

  DeficitResult r;
  r.delta = best;
  int within = 0;
  bool chosen = false;
  for (std::size_t i = 0; i < count; ++i) {
    if (cands[i].value - best < kTieTolerance) {
      ++within;
      if (!chosen) {
        r.branch = cands[i].branch;
        r.optimal_theta = cands[i].theta;
        chosen = true;
      }
    }
  }
  r.tie = within > 1;
  return r;
}

DeficitResult one_way_deficit(const StateParams& p, const ShapeOptions& options) {
  return pick_branch(branch_values(p, options));
}

DeficitResult naive_deficit_eq3(const StateParams& p, double fd_step, const ShapeOptions& options) {
  // S is even about both endpoints, so the symmetric second difference
  // reduces to a one-sided one.
  const double s0 = post_entropy(p, 0.0);
  const double s_half = post_entropy(p, kHalfPi);
  const double curv_zero = 2.0 * (post_entropy(p, fd_step) - s0) / (fd_step * fd_step);
  const double curv_halfpi = 2.0 * (post_entropy(p, kHalfPi - fd_step) - s_half) / (fd_step * fd_step);

  const BranchValues v = branch_values(p, options);
  if (curv_zero < 0.0 && curv_halfpi < 0.0 && v.interior) {
    DeficitResult r;
    r.delta = v.interior->value;
    r.branch = Branch::Interior;
    r.optimal_theta = v.interior->vartheta;
    return r;
  }
  return endpoint_choice(v.delta_zero, v.delta_halfpi);
}

}  // namespace xdeficit
