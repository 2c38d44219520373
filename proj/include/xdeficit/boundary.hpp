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

// Phase boundaries located by 1-D root finding along straight trajectories
// q1 + q2 = const, or along the q1 axis.

#ifndef XDEFICIT_BOUNDARY_HPP
#define XDEFICIT_BOUNDARY_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "xdeficit/shape.hpp"
#include "xdeficit/solve.hpp"
#include "xdeficit/state.hpp"

namespace xdeficit {

/// A straight path through the triangle parametrized by its leading weight
/// t. Diagonal paths run from the midpoint (total/2, total/2) to the axis
/// point (total, 0); the axis path runs from (0, 0) to (1, 0). A mirrored
/// path has q1 and q2 exchanged, so t is then the q2 coordinate.
class TrajectorySpec {
 public:
  static TrajectorySpec diagonal(double total, bool mirrored = false);
  static TrajectorySpec axis(bool mirrored = false);

  bool is_axis() const noexcept { return axis_; }
  bool mirrored() const noexcept { return mirrored_; }
  /// q1 + q2 along a diagonal path; 1 is reported for the axis.
  double total() const noexcept { return total_; }
  double t_begin() const noexcept { return axis_ ? 0.0 : total_ / 2.0; }
  double t_end() const noexcept { return axis_ ? 1.0 : total_; }

  StateParams at(double t) const;
  TrajectorySpec mirror() const noexcept;

 private:
  TrajectorySpec(bool axis, double total, bool mirrored) noexcept
      : axis_(axis), total_(total), mirrored_(mirrored) {}

  bool axis_;
  double total_;
  bool mirrored_;
};

enum class BoundaryKind {
  EqualEndpoints,
  HalfPiBifurcation,
  ZeroBifurcationAxis,
  JumpBoundary,
  BimodalityBirth,
};

std::string_view to_string(BoundaryKind k);

struct BoundaryPoint {
  StateParams p{0.0, 0.0};
  BoundaryKind kind = BoundaryKind::EqualEndpoints;
  /// |defining function| at p. For BimodalityBirth, the final bracket width.
  double residual = 0.0;
  /// Pure-state corner, where every branch coincides.
  bool degenerate = false;
};

struct JumpRecord {
  BoundaryPoint boundary;
  /// Step of the optimal angle, from 0 to the interior minimizer.
  double jump_angle = 0.0;
};

enum class SolveError { NoRoot, NoInteriorMinimum, NoTransition };

std::string_view to_string(SolveError e);

/// A value or the reason there is none.
template <class T>
class Solved {
 public:
  Solved(T value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Solved(SolveError e) : v_(e) {}            // NOLINT(google-explicit-constructor)

  bool ok() const noexcept { return std::holds_alternative<T>(v_); }
  explicit operator bool() const noexcept { return ok(); }
  const T& value() const { return std::get<T>(v_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  SolveError error() const { return std::get<SolveError>(v_); }

 private:
  std::variant<T, SolveError> v_;
};

struct SolverOptions {
  /// Samples per trajectory before bisection.
  int scan_samples = 2048;
  /// Tolerance on the trajectory coordinate.
  double tol = 1e-7;
  /// Tolerance of the bimodality-birth predicate bisection.
  double birth_tol = 1e-6;
  /// Shape analysis used when the interior minimum is needed.
  ShapeOptions shape{.grid_n = 1024};
};

/// Root of S0 - S(pi/2) along the trajectory; the one with the largest t
/// when there are several. The pure corner is never returned here.
Solved<BoundaryPoint> solve_equal_endpoints(const TrajectorySpec& traj,
                                            const SolverOptions& opt = {});

/// Root of the curvature at theta = pi/2 along the trajectory.
Solved<BoundaryPoint> solve_halfpi_boundary(const TrajectorySpec& traj,
                                            const SolverOptions& opt = {});

/// The roots q = 1/2 and q = 1 of the on-axis curvature at theta = 0, on both
/// axes: (0.5, 0), (1, 0), (0, 0.5), (0, 1).
std::vector<BoundaryPoint> zero_boundary_axis();

/// Point where the interior minimum drops below the theta = 0 branch, and
/// the interior minimizer there.
Solved<JumpRecord> solve_jump_boundary(const TrajectorySpec& traj, const SolverOptions& opt = {});

/// First point along the trajectory where the shape turns bimodal.
Solved<BoundaryPoint> bimodality_birth(const TrajectorySpec& traj, const SolverOptions& opt = {});

/// Crossing of the equal-endpoint curve with the pi/2 curvature curve on the
/// q1 > q2 side, found by bisection over trajectory totals.
StateParams curves_intersection(const SolverOptions& opt = {});

/// Jump angles on the boundary between the theta = 0 and interior phases:
/// the axis limit, the trajectories 0.55, 0.6, 0.65, 0.7, 0.75, and the
/// intersection limit.
std::vector<JumpRecord> jump_angle_table(const SolverOptions& opt = {});

inline constexpr double kTable1Totals[] = {0.55, 0.6, 0.65, 0.7, 0.75};

}  // namespace xdeficit

#endif  // XDEFICIT_BOUNDARY_HPP
