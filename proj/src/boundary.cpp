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

#include "xdeficit/boundary.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "xdeficit/parallel.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit {
namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Samples f on scan_samples + 1 uniform points of the trajectory. The
// samples are independent, so the loop is spread over threads; the result
// does not depend on the thread count.
std::vector<std::optional<double>> scan(const TrajectorySpec& traj, int samples,
                                        const std::function<std::optional<double>(double)>& f,
                                        std::vector<double>& ts) {
  const double a = traj.t_begin();
  const double b = traj.t_end();
  ts.resize(samples + 1);
  std::vector<std::optional<double>> values(samples + 1);
  for (int k = 0; k <= samples; ++k) ts[k] = (k == samples) ? b : a + (b - a) * k / samples;
  parallel_for(samples + 1, [&](long k) { values[k] = f(ts[k]); });
  return values;
}

// Bracket [ts[k], ts[k+1]] of the sign change with the largest t.
std::optional<int> last_sign_change(const std::vector<std::optional<double>>& v) {
  std::optional<int> found;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (!v[k] || !v[k + 1]) continue;
    const int s0 = sign_of(*v[k]);
    const int s1 = sign_of(*v[k + 1]);
    if (s0 != 0 && s1 != 0 && s0 != s1) found = static_cast<int>(k);
  }
  return found;
}

double endpoint_gap(const StateParams& p) {
  return endpoint_entropy_zero(p) - endpoint_entropy_halfpi(p);
}

bool is_pure_corner(const StateParams& p) {
  return std::max(p.q1(), p.q2()) > 1.0 - 1e-12;
}

}  // namespace

TrajectorySpec TrajectorySpec::diagonal(double total, bool mirrored) {
  if (!(total > 0.0 && total <= 1.0)) {
    std::ostringstream os;
    os << "trajectory total " << total << " is outside (0, 1]";
    throw DomainError(os.str());
  }
  return TrajectorySpec(false, total, mirrored);
}

TrajectorySpec TrajectorySpec::axis(bool mirrored) { return TrajectorySpec(true, 1.0, mirrored); }

StateParams TrajectorySpec::at(double t) const {
  const double other = axis_ ? 0.0 : std::max(0.0, total_ - t);
  return mirrored_ ? StateParams(other, t) : StateParams(t, other);
}

TrajectorySpec TrajectorySpec::mirror() const noexcept {
  return TrajectorySpec(axis_, total_, !mirrored_);
}

std::string_view to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::EqualEndpoints: return "EqualEndpoints";
    case BoundaryKind::HalfPiBifurcation: return "HalfPiBifurcation";
    case BoundaryKind::ZeroBifurcationAxis: return "ZeroBifurcationAxis";
    case BoundaryKind::JumpBoundary: return "JumpBoundary";
    case BoundaryKind::BimodalityBirth: return "BimodalityBirth";
  }
  return "?";
}

std::string_view to_string(SolveError e) {
  switch (e) {
    case SolveError::NoRoot: return "NoRoot";
    case SolveError::NoInteriorMinimum: return "NoInteriorMinimum";
    case SolveError::NoTransition: return "NoTransition";
  }
  return "?";
}

Solved<BoundaryPoint> solve_equal_endpoints(const TrajectorySpec& traj, const SolverOptions& opt) {
  auto f = [&](double t) { return endpoint_gap(traj.at(t)); };
  std::vector<double> ts;
  const auto values = scan(traj, opt.scan_samples,
                           [&](double t) -> std::optional<double> { return f(t); }, ts);
  const auto k = last_sign_change(values);
  if (!k) return SolveError::NoRoot;
  const double t = bisect(f, ts[*k], ts[*k + 1], opt.tol);
  const StateParams p = traj.at(t);
  return BoundaryPoint{p, BoundaryKind::EqualEndpoints, std::abs(f(t)), is_pure_corner(p)};
}

Solved<BoundaryPoint> solve_halfpi_boundary(const TrajectorySpec& traj, const SolverOptions& opt) {
  std::vector<double> ts;
  const auto values = scan(traj, opt.scan_samples,
                           [&](double t) { return s2_halfpi(traj.at(t)); }, ts);
  const auto k = last_sign_change(values);
  if (!k) return SolveError::NoRoot;
  auto f = [&](double t) { return s2_halfpi(traj.at(t)).value_or(0.0); };
  const double t = bisect(f, ts[*k], ts[*k + 1], opt.tol);
  const StateParams p = traj.at(t);
  return BoundaryPoint{p, BoundaryKind::HalfPiBifurcation, std::abs(f(t)), is_pure_corner(p)};
}

std::vector<BoundaryPoint> zero_boundary_axis() {
  std::vector<BoundaryPoint> out;
  for (const bool mirrored : {false, true}) {
    for (const double q : {0.5, 1.0}) {
      const StateParams p = mirrored ? StateParams(0.0, q) : StateParams(q, 0.0);
      out.push_back({p, BoundaryKind::ZeroBifurcationAxis, std::abs(s2_zero_on_axis(q)),
                     is_pure_corner(p)});
    }
  }
  return out;
}

Solved<JumpRecord> solve_jump_boundary(const TrajectorySpec& traj, const SolverOptions& opt) {
  // g = S0 - S(vartheta); the jump happens where it turns positive.
  auto g = [&](double t) -> std::optional<double> {
    const StateParams p = traj.at(t);
    const auto m = interior_minimum(p, opt.shape);
    if (!m) return std::nullopt;
    return endpoint_entropy_zero(p) - m->value;
  };
  std::vector<double> ts;
  const auto values = scan(traj, opt.scan_samples, g, ts);

  // Where the interior minimum is missing it is effectively above S0. Near
  // the axis it is born only just before the jump, so a scan step can go
  // from no minimum straight to g > 0.
  bool any_interior = false;
  std::optional<int> bracket;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (values[k]) any_interior = true;
    if (!values[k + 1]) continue;
    if (values[k].value_or(-1.0) <= 0.0 && *values[k + 1] > 0.0 &&
        endpoint_gap(traj.at(ts[k])) <= 0.0) {
      bracket = static_cast<int>(k);
      break;
    }
  }
  if (values.back()) any_interior = true;
  if (!any_interior) return SolveError::NoInteriorMinimum;
  if (!bracket) return SolveError::NoRoot;

  auto g_total = [&](double t) { return g(t).value_or(-1.0); };
  const double t = bisect(g_total, ts[*bracket], ts[*bracket + 1], opt.tol);
  const StateParams p = traj.at(t);
  const auto m = interior_minimum(p, opt.shape);
  if (!m) return SolveError::NoInteriorMinimum;
  JumpRecord rec;
  rec.boundary = {p, BoundaryKind::JumpBoundary,
                  std::abs(endpoint_entropy_zero(p) - m->value), false};
  rec.jump_angle = m->vartheta;
  return rec;
}

Solved<BoundaryPoint> bimodality_birth(const TrajectorySpec& traj, const SolverOptions& opt) {
  auto bimodal = [&](double t) {
    return classify_shape(traj.at(t), opt.shape).shape_class == ShapeClass::Bimodal;
  };
  std::vector<double> ts;
  const auto values = scan(traj, opt.scan_samples,
                           [&](double t) -> std::optional<double> { return bimodal(t) ? 1.0 : 0.0; },
                           ts);
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (*values[k] == 0.0 && *values[k + 1] == 1.0) {
      const auto [lo, hi] = bisect_predicate(bimodal, ts[k], ts[k + 1], opt.birth_tol);
      return BoundaryPoint{traj.at(hi), BoundaryKind::BimodalityBirth, hi - lo, false};
    }
  }
  return SolveError::NoTransition;
}

StateParams curves_intersection(const SolverOptions& opt) {
  SolverOptions inner = opt;
  inner.tol = 1e-12;
  auto offset = [&](double total) {
    const auto traj = TrajectorySpec::diagonal(total);
    const auto eq = solve_equal_endpoints(traj, inner);
    const auto hp = solve_halfpi_boundary(traj, inner);
    if (!eq || !hp) throw ConvergenceError("curves_intersection: a curve is missing at total " +
                                           std::to_string(total));
    return eq->p.q1() - hp->p.q1();
  };
  const double total = bisect(offset, 0.70, 0.85, 1e-11);
  const auto eq = solve_equal_endpoints(TrajectorySpec::diagonal(total), inner);
  if (!eq) throw ConvergenceError("curves_intersection: no equal-endpoint root at the crossing");
  return eq->p;
}

std::vector<JumpRecord> jump_angle_table(const SolverOptions& opt) {
  std::vector<JumpRecord> rows;
  const StateParams axis_point(0.5, 0.0);
  rows.push_back({{axis_point, BoundaryKind::ZeroBifurcationAxis, std::abs(s2_zero_on_axis(0.5)),
                   false},
                  0.0});
  for (const double total : kTable1Totals) {
    const auto rec = solve_jump_boundary(TrajectorySpec::diagonal(total), opt);
    if (!rec) {
      throw ConvergenceError("jump_angle_table: " + std::string(to_string(rec.error())) +
                             " on total " + std::to_string(total));
    }
    rows.push_back(*rec);
  }
  const StateParams corner = curves_intersection(opt);
  rows.push_back({{corner, BoundaryKind::JumpBoundary, std::abs(endpoint_gap(corner)), false},
                  kHalfPi});
  return rows;
}

}  // namespace xdeficit
