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

// One-way deficit: min over the two closed-form endpoint branches and the
// numerically located interior minimum.

#ifndef XDEFICIT_DEFICIT_HPP
#define XDEFICIT_DEFICIT_HPP

#include <optional>
#include <string_view>

#include "xdeficit/shape.hpp"
#include "xdeficit/state.hpp"

namespace xdeficit {

enum class Branch { AtZero, Interior, AtHalfPi };

std::string_view to_string(Branch b);

struct DeficitResult {
  double delta = 0.0;  // bits
  Branch branch = Branch::AtZero;
  double optimal_theta = 0.0;
  /// Set when the runner-up branch is within kTieTolerance of the best.
  bool tie = false;
};

inline constexpr double kTieTolerance = 1e-9;

struct BranchValues {
  double delta_zero;
  double delta_halfpi;
  std::optional<InteriorMinimum> interior;  // value holds the deficit, not the entropy
};

BranchValues branch_values(const StateParams& p, const ShapeOptions& options = {});

/// Minimum over the available branches. Branches within kTieTolerance of
/// the best are resolved in the order AtZero, AtHalfPi, Interior; delta is
/// always the smallest branch value.
DeficitResult one_way_deficit(const StateParams& p, const ShapeOptions& options = {});
DeficitResult pick_branch(const BranchValues& values);

/// The earlier rule: take the interior value only when finite-difference
/// curvatures at both endpoints are negative, otherwise the smaller endpoint
/// value. It is wrong for bimodal shapes and is kept to show that.
DeficitResult naive_deficit_eq3(const StateParams& p, double fd_step = 1e-3,
                                const ShapeOptions& options = {});

}  // namespace xdeficit

#endif  // XDEFICIT_DEFICIT_HPP
