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

#include "xdeficit/phase.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "xdeficit/parallel.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit {
namespace {

void require_resolution(int resolution, const char* what) {
  if (resolution < 100) {
    throw DomainError(std::string(what) + ": resolution must be at least 100");
  }
}

PhaseCell evaluate_cell(const StateParams& p, const ShapeOptions& shape) {
  try {
    const DeficitResult r = one_way_deficit(p, shape);
    return {p, label_of(r.branch), r.delta, r.optimal_theta};
  } catch (const UnresolvedShape&) {
    return {p, PhaseLabel::Unresolved, std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::quiet_NaN()};
  }
}

void summarize(PhaseGrid& grid) {
  std::size_t interior = 0;
  for (const PhaseCell& c : grid.cells) {
    if (c.label == PhaseLabel::Interior) ++interior;
    if (c.label == PhaseLabel::Unresolved) ++grid.unresolved;
  }
  grid.area_fraction_interior =
      grid.cells.empty() ? 0.0 : static_cast<double>(interior) / grid.cells.size();
}

ProfileRow evaluate_profile_row(const TrajectorySpec& traj, int samples, int k,
                                const ShapeOptions& shape) {
  const double a = traj.t_begin();
  const double b = traj.t_end();
  const double t = (k == samples) ? b : a + (b - a) * k / samples;
  const StateParams p = traj.at(t);
  return {p, t, one_way_deficit(p, shape)};
}

void mark_transitions(TrajectoryProfile& prof) {
  for (std::size_t k = 1; k < prof.rows.size(); ++k) {
    if (prof.rows[k].result.branch != prof.rows[k - 1].result.branch) {
      prof.transitions.push_back(k);
    }
  }
}

double distance(const StateParams& a, const StateParams& b) {
  return std::hypot(a.q1() - b.q1(), a.q2() - b.q2());
}

using CurveSolver = std::function<std::optional<BoundaryPoint>(double total)>;

// Points at the given totals, with extra trajectories bisected in wherever
// consecutive points are too far apart.
BoundaryCurve chain(BoundaryKind kind, const CurveSolver& solve, std::vector<double> totals,
                    std::vector<BoundaryPoint> fixed, double spacing) {
  std::vector<std::optional<BoundaryPoint>> solved(totals.size());
  parallel_for(static_cast<long>(totals.size()), [&](long i) { solved[i] = solve(totals[i]); });

  struct Node {
    double total;
    BoundaryPoint point;
  };
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (solved[i]) nodes.push_back({totals[i], *solved[i]});
  }
  for (const BoundaryPoint& f : fixed) nodes.push_back({f.p.total(), f});
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return a.total < b.total; });

  BoundaryCurve curve{kind, false, {}, 0};
  std::function<void(const Node&, const Node&, int)> fill = [&](const Node& a, const Node& b,
                                                                int depth) {
    if (distance(a.point.p, b.point.p) <= spacing) return;
    const double mid = 0.5 * (a.total + b.total);
    std::optional<BoundaryPoint> m;
    if (depth < 10 && mid > a.total && mid < b.total) m = solve(mid);
    if (!m) {
      ++curve.gaps;
      return;
    }
    const Node mn{mid, *m};
    fill(a, mn, depth + 1);
    curve.points.push_back(mn.point);
    fill(mn, b, depth + 1);
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) fill(nodes[i - 1], nodes[i], 0);
    curve.points.push_back(nodes[i].point);
  }
  return curve;
}

BoundaryCurve mirrored(const BoundaryCurve& c) {
  BoundaryCurve m = c;
  m.mirrored = true;
  for (BoundaryPoint& bp : m.points) bp.p = bp.p.swapped();
  return m;
}

}  // namespace

std::string_view to_string(PhaseLabel l) {
  switch (l) {
    case PhaseLabel::AtZero: return "AtZero";
    case PhaseLabel::Interior: return "Interior";
    case PhaseLabel::AtHalfPi: return "AtHalfPi";
    case PhaseLabel::Unresolved: return "Unresolved";
  }
  return "?";
}

PhaseLabel label_of(Branch b) {
  switch (b) {
    case Branch::AtZero: return PhaseLabel::AtZero;
    case Branch::Interior: return PhaseLabel::Interior;
    case Branch::AtHalfPi: return PhaseLabel::AtHalfPi;
  }
  return PhaseLabel::Unresolved;
}

std::vector<StateParams> triangle_cell_centers(int resolution) {
  std::vector<StateParams> centers;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const double q1 = (i + 0.5) / resolution;
      const double q2 = (j + 0.5) / resolution;
      if (i + j + 1 <= resolution) centers.emplace_back(q1, q2);
    }
  }
  return centers;
}

PhaseGrid sweep(int resolution, int theta_grid) {
  require_resolution(resolution, "sweep");
  const ShapeOptions shape{.grid_n = theta_grid};
  const std::vector<StateParams> centers = triangle_cell_centers(resolution);
  PhaseGrid grid;
  grid.resolution = resolution;
  grid.cells.resize(centers.size(), PhaseCell{StateParams(0.0, 0.0), PhaseLabel::Unresolved, 0, 0});
  parallel_for(static_cast<long>(centers.size()),
               [&](long k) { grid.cells[k] = evaluate_cell(centers[k], shape); });
  summarize(grid);
  return grid;
}

PhaseGrid sweep_serial(int resolution, int theta_grid) {
  require_resolution(resolution, "sweep_serial");
  const ShapeOptions shape{.grid_n = theta_grid};
  PhaseGrid grid;
  grid.resolution = resolution;
  for (const StateParams& p : triangle_cell_centers(resolution)) {
    grid.cells.push_back(evaluate_cell(p, shape));
  }
  summarize(grid);
  return grid;
}

TrajectoryProfile trajectory_profile(const TrajectorySpec& traj, int samples,
                                     const ShapeOptions& shape) {
  require_resolution(samples, "trajectory_profile");
  TrajectoryProfile prof;
  prof.rows.resize(samples + 1, ProfileRow{StateParams(0.0, 0.0), 0.0, {}});
  parallel_for(samples + 1,
               [&](long k) { prof.rows[k] = evaluate_profile_row(traj, samples, k, shape); });
  mark_transitions(prof);
  return prof;
}

TrajectoryProfile trajectory_profile_serial(const TrajectorySpec& traj, int samples,
                                            const ShapeOptions& shape) {
  require_resolution(samples, "trajectory_profile_serial");
  TrajectoryProfile prof;
  for (int k = 0; k <= samples; ++k) {
    prof.rows.push_back(evaluate_profile_row(traj, samples, k, shape));
  }
  mark_transitions(prof);
  return prof;
}

std::vector<BoundaryCurve> trace_boundaries(int resolution, const SolverOptions& opt) {
  require_resolution(resolution, "trace_boundaries");
  const double spacing = 2.0 / resolution;
  const StateParams crossing = curves_intersection(opt);
  const BoundaryPoint corner{StateParams(1.0, 0.0), BoundaryKind::EqualEndpoints, 0.0, true};

  std::vector<double> all_totals;
  std::vector<double> jump_totals;
  for (int k = 1; k <= resolution; ++k) {
    const double total = static_cast<double>(k) / resolution;
    all_totals.push_back(total);
    if (total > 0.5 && total < crossing.total()) jump_totals.push_back(total);
  }

  std::vector<BoundaryCurve> curves;

  {
    std::vector<BoundaryPoint> fixed{corner};
    if (auto axis_root = solve_equal_endpoints(TrajectorySpec::axis(), opt)) {
      fixed.push_back(*axis_root);
    }
    curves.push_back(chain(
        BoundaryKind::EqualEndpoints,
        [&](double total) -> std::optional<BoundaryPoint> {
          if (total >= 1.0) return std::nullopt;
          auto r = solve_equal_endpoints(TrajectorySpec::diagonal(total), opt);
          return r ? std::optional<BoundaryPoint>(*r) : std::nullopt;
        },
        all_totals, fixed, spacing));
  }
  {
    BoundaryPoint hp_corner = corner;
    hp_corner.kind = BoundaryKind::HalfPiBifurcation;
    std::vector<BoundaryPoint> fixed{hp_corner};
    if (auto axis_root = solve_halfpi_boundary(TrajectorySpec::axis(), opt)) {
      fixed.push_back(*axis_root);
    }
    curves.push_back(chain(
        BoundaryKind::HalfPiBifurcation,
        [&](double total) -> std::optional<BoundaryPoint> {
          if (total >= 1.0) return std::nullopt;
          auto r = solve_halfpi_boundary(TrajectorySpec::diagonal(total), opt);
          return r ? std::optional<BoundaryPoint>(*r) : std::nullopt;
        },
        all_totals, fixed, spacing));
  }
  {
    std::vector<BoundaryPoint> fixed{
        {StateParams(0.5, 0.0), BoundaryKind::JumpBoundary, std::abs(s2_zero_on_axis(0.5)), false},
        {crossing, BoundaryKind::JumpBoundary,
         std::abs(endpoint_entropy_zero(crossing) - endpoint_entropy_halfpi(crossing)), false}};
    curves.push_back(chain(
        BoundaryKind::JumpBoundary,
        [&](double total) -> std::optional<BoundaryPoint> {
          if (total <= 0.5 || total >= crossing.total()) return std::nullopt;
          auto r = solve_jump_boundary(TrajectorySpec::diagonal(total), opt);
          return r ? std::optional<BoundaryPoint>(r->boundary) : std::nullopt;
        },
        jump_totals, fixed, spacing));
  }

  const std::size_t n = curves.size();
  for (std::size_t i = 0; i < n; ++i) curves.push_back(mirrored(curves[i]));
  return curves;
}

}  // namespace xdeficit
