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

// Sweeps over the triangle and along trajectories. Each sweep has an
// OpenMP kernel and a plain serial reference that must agree exactly.

#ifndef XDEFICIT_PHASE_HPP
#define XDEFICIT_PHASE_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "xdeficit/boundary.hpp"
#include "xdeficit/deficit.hpp"
#include "xdeficit/shape.hpp"
#include "xdeficit/state.hpp"

namespace xdeficit {

enum class PhaseLabel { AtZero, Interior, AtHalfPi, Unresolved };

std::string_view to_string(PhaseLabel l);
PhaseLabel label_of(Branch b);

struct PhaseCell {
  StateParams p;
  PhaseLabel label;
  double delta;  // bits; NaN when unresolved
  double optimal_theta;
};

struct PhaseGrid {
  int resolution = 0;
  /// Row-major over (i, j) with i indexing q1; only centers inside the
  /// triangle are present.
  std::vector<PhaseCell> cells;
  double area_fraction_interior = 0.0;
  std::size_t unresolved = 0;
};

/// Centers ((i + 1/2)/resolution, (j + 1/2)/resolution) with q1 + q2 <= 1.
std::vector<StateParams> triangle_cell_centers(int resolution);

/// Labels every cell with its winning branch. Requires resolution >= 100.
PhaseGrid sweep(int resolution, int theta_grid = ShapeOptions::kDefaultGrid);
PhaseGrid sweep_serial(int resolution, int theta_grid = ShapeOptions::kDefaultGrid);

struct ProfileRow {
  StateParams p;
  double t;
  DeficitResult result;
};

struct TrajectoryProfile {
  std::vector<ProfileRow> rows;
  /// Indices k where rows[k].result.branch differs from rows[k - 1].
  std::vector<std::size_t> transitions;
};

/// Deficit at `samples` + 1 evenly spaced points of the trajectory.
/// Requires samples >= 100.
TrajectoryProfile trajectory_profile(const TrajectorySpec& traj, int samples,
                                     const ShapeOptions& shape = {});
TrajectoryProfile trajectory_profile_serial(const TrajectorySpec& traj, int samples,
                                            const ShapeOptions& shape = {});

struct BoundaryCurve {
  BoundaryKind kind;
  bool mirrored;
  /// Ordered by trajectory total.
  std::vector<BoundaryPoint> points;
  /// Consecutive points farther apart than 2 / resolution that could not be
  /// closed by extra trajectories.
  std::size_t gaps = 0;
};

/// Equal-endpoint, pi/2 and jump boundaries from fans of trajectories,
/// each with its mirror image. Requires resolution >= 100.
std::vector<BoundaryCurve> trace_boundaries(int resolution, const SolverOptions& opt = {});

}  // namespace xdeficit

#endif  // XDEFICIT_PHASE_HPP
