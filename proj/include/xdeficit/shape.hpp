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

// Shape of the post-measurement entropy S(theta) on [0, pi/2].

#ifndef XDEFICIT_SHAPE_HPP
#define XDEFICIT_SHAPE_HPP

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "xdeficit/state.hpp"

namespace xdeficit {

enum class ShapeClass {
  MonotoneIncreasing,
  MonotoneDecreasing,
  InteriorMinimum,
  InteriorMaximum,
  Bimodal,
  Flat,
};

std::string_view to_string(ShapeClass c);

enum class ExtremumKind { Min, Max };

std::string_view to_string(ExtremumKind k);

struct Extremum {
  double theta;
  double value;  // bits
  ExtremumKind kind;
};

struct ShapeReport {
  ShapeClass shape_class = ShapeClass::Flat;
  /// Sorted by theta, each inside [kEndpointExclusion, pi/2 - kEndpointExclusion].
  std::vector<Extremum> extrema;
  int grid_n = 0;
  double value_zero = 0.0;
  double value_halfpi = 0.0;

  const Extremum* interior_min() const;
  const Extremum* interior_max() const;
};

/// More than two interior extrema, or extrema that do not alternate.
class UnresolvedShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShapeOptions {
  static constexpr int kDefaultGrid = 512;
  static constexpr double kDefaultRefineTol = 1e-9;

  int grid_n = kDefaultGrid;
  double refine_tol = kDefaultRefineTol;
  /// Per base grid step, in bits. Smaller differences carry no sign.
  double flat_threshold = 1e-12;
  /// Extrema closer than this to an endpoint are merged into it.
  double endpoint_exclusion = 1e-4;
  /// Effective resolution cap of the adaptive pass.
  int max_resolution = 1 << 14;
};

/// Samples S on a uniform grid, looks for sign changes of the discrete
/// slope, zooms into places where the slope magnitude has a local dip (a
/// freshly born pair of extrema hides there), refines each bracketed
/// extremum by golden section and classifies the result.
///
/// Throws DomainError for grid_n < 64 or refine_tol > 1e-8, and
/// UnresolvedShape for anything beyond a bimodal pattern.
ShapeReport classify_shape(const StateParams& p, const ShapeOptions& options = {});

struct InteriorMinimum {
  double vartheta;
  double value;  // bits
};

/// Location and value of the interior minimum, if the shape has one.
std::optional<InteriorMinimum> interior_minimum(const StateParams& p,
                                                const ShapeOptions& options = {});

struct EndpointSlopes {
  double at_zero;
  double at_halfpi;
};

/// Magnitudes of the central difference slope of S at theta = 0 and pi/2
/// with step h, using S beyond the interval (S is even about both ends).
EndpointSlopes endpoint_slope_check(const StateParams& p, double h = 1e-5);

}  // namespace xdeficit

#endif  // XDEFICIT_SHAPE_HPP
