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

#include "xdeficit/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xdeficit/solve.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit {
namespace {

struct Sample {
  double theta;
  double value;
};

// Differences below this many ulps of the entropy (<= 2 bits) are noise.
constexpr double kNoiseFloor = 16.0 * 2.0 * std::numeric_limits<double>::epsilon();

int slope_sign(double dv, double threshold) {
  threshold = std::max(threshold, kNoiseFloor);
  if (dv > threshold) return 1;
  if (dv < -threshold) return -1;
  return 0;
}

// Resamples [lo, hi] at doubling densities until a slope sign change shows
// up or the effective resolution cap is reached. New samples go to `out`.
void zoom_dip(const StateParams& p, double lo, double hi, double base_step,
              const ShapeOptions& opt, std::vector<Sample>& out) {
  const int cells = std::max(1, static_cast<int>(std::lround((hi - lo) / base_step)));
  for (int factor = 2; opt.grid_n * factor <= opt.max_resolution; factor *= 2) {
    const int m = cells * factor;
    const double step = (hi - lo) / m;
    const double threshold = opt.flat_threshold * step / base_step;
    std::vector<Sample> local;
    local.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
      const double t = (j == m) ? hi : lo + j * step;
      local.push_back({t, post_entropy(p, t)});
    }
    int last = 0;
    bool changed = false;
    for (int j = 0; j < m; ++j) {
      const int s = slope_sign(local[j + 1].value - local[j].value, threshold);
      if (s == 0) continue;
      if (last != 0 && s != last) changed = true;
      last = s;
    }
    out.insert(out.end(), local.begin(), local.end());
    if (changed) return;
  }
}

}  // namespace

std::string_view to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::MonotoneIncreasing: return "MonotoneIncreasing";
    case ShapeClass::MonotoneDecreasing: return "MonotoneDecreasing";
    case ShapeClass::InteriorMinimum: return "InteriorMinimum";
    case ShapeClass::InteriorMaximum: return "InteriorMaximum";
    case ShapeClass::Bimodal: return "Bimodal";
    case ShapeClass::Flat: return "Flat";
  }
  return "?";
}

std::string_view to_string(ExtremumKind k) {
  return k == ExtremumKind::Min ? "min" : "max";
}

const Extremum* ShapeReport::interior_min() const {
  for (const Extremum& e : extrema)
    if (e.kind == ExtremumKind::Min) return &e;
  return nullptr;
}

const Extremum* ShapeReport::interior_max() const {
  for (const Extremum& e : extrema)
    if (e.kind == ExtremumKind::Max) return &e;
  return nullptr;
}

ShapeReport classify_shape(const StateParams& p, const ShapeOptions& opt) {
  if (opt.grid_n < 64) throw DomainError("classify_shape: grid_n must be at least 64");
  if (!(opt.refine_tol > 0.0 && opt.refine_tol <= 1e-8)) {
    throw DomainError("classify_shape: refine_tol must be in (0, 1e-8]");
  }

  const int n = opt.grid_n;
  const double step = kHalfPi / n;
  std::vector<Sample> samples;
  samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = (i == n) ? kHalfPi : i * step;
    samples.push_back({t, post_entropy(p, t)});
  }
  for (const Sample& s : samples) {
    if (!std::isfinite(s.value)) throw UnresolvedShape("classify_shape: non-finite entropy");
  }

  std::vector<double> slope(n);
  for (int i = 0; i < n; ++i) slope[i] = samples[i + 1].value - samples[i].value;

  // Adaptive pass around slope dips.
  std::vector<Sample> extra;
  // Off the axes the curvature at theta = 0 diverges, which can squeeze an
  // extremum below the first grid step. Values there differ by little more
  // than rounding, so log-spaced probes look at the analytic slope and only
  // feed a confirmed sign change into the walk.
  if (opt.endpoint_exclusion < step) {
    constexpr int kProbes = 32;
    const double ratio = step / opt.endpoint_exclusion;
    auto slope_at = [&](double t) { return post_entropy_slope(p, t); };
    for (double side : {0.0, kHalfPi}) {
      auto at = [&](int k) {
        const double d = opt.endpoint_exclusion * std::pow(ratio, static_cast<double>(k) / kProbes);
        return side == 0.0 ? d : kHalfPi - d;
      };
      double a = at(0);
      double sa = slope_at(a);
      for (int k = 1; k <= kProbes; ++k) {
        const double b = at(k);
        const double sb = slope_at(b);
        if ((sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0)) {
          const double x = bisect(slope_at, std::min(a, b), std::max(a, b), 1e-15);
          for (double t : {a, x, b}) extra.push_back({t, post_entropy(p, t)});
        }
        a = b;
        sa = sb;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const int s = slope_sign(slope[i], opt.flat_threshold);
    if (s == 0) continue;
    const double mag = std::abs(slope[i]);
    bool dip = mag < 10.0 * opt.flat_threshold;
    if (!dip && i > 0 && i + 1 < n) {
      dip = slope_sign(slope[i - 1], opt.flat_threshold) == s &&
            slope_sign(slope[i + 1], opt.flat_threshold) == s &&
            mag <= std::abs(slope[i - 1]) && mag <= std::abs(slope[i + 1]);
    }
    if (!dip) continue;
    const double lo = samples[std::max(i - 1, 0)].theta;
    const double hi = samples[std::min(i + 2, n)].theta;
    zoom_dip(p, lo, hi, step, opt, extra);
  }
  if (!extra.empty()) {
    samples.insert(samples.end(), extra.begin(), extra.end());
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
    samples.erase(std::unique(samples.begin(), samples.end(),
                              [](const Sample& a, const Sample& b) { return a.theta == b.theta; }),
                  samples.end());
  }

  ShapeReport report;
  report.grid_n = n;
  report.value_zero = samples.front().value;
  report.value_halfpi = samples.back().value;

  // Walk the merged samples and bracket every change of slope sign. Flat
  // stretches carry no sign, so a tie never creates an extremum.
  int last_sign = 0;
  std::size_t last_start = 0;
  for (std::size_t j = 0; j + 1 < samples.size(); ++j) {
    const double dt = samples[j + 1].theta - samples[j].theta;
    const int s = slope_sign(samples[j + 1].value - samples[j].value,
                             opt.flat_threshold * dt / step);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      const double lo = samples[last_start].theta;
      const double hi = samples[j + 1].theta;
      const ExtremumKind kind = last_sign > 0 ? ExtremumKind::Max : ExtremumKind::Min;
      const double sgn = kind == ExtremumKind::Min ? 1.0 : -1.0;
      Minimum m = golden_section_minimize(
          [&](double t) { return sgn * post_entropy(p, t); }, lo, hi, opt.refine_tol);
      // Values resolve the position only to ~sqrt(eps); polish on the slope.
      const double a = std::max(lo, m.x - 1e-6), b = std::min(hi, m.x + 1e-6);
      const double fa = sgn * post_entropy_slope(p, a), fb = sgn * post_entropy_slope(p, b);
      if (fa < 0.0 && fb > 0.0) {
        const double x = bisect([&](double t) { return post_entropy_slope(p, t); }, a, b, 1e-13);
        m = {x, sgn * post_entropy(p, x)};
      }
      if (m.x >= opt.endpoint_exclusion && m.x <= kHalfPi - opt.endpoint_exclusion) {
        report.extrema.push_back({m.x, sgn * m.value, kind});
      }
    }
    last_sign = s;
    last_start = j;
  }

  const auto& ex = report.extrema;
  for (std::size_t k = 1; k < ex.size(); ++k) {
    if (ex[k].kind == ex[k - 1].kind) {
      throw UnresolvedShape("classify_shape: extrema of the same kind are adjacent at " +
                            to_string(p));
    }
  }
  if (ex.size() > 2) {
    std::ostringstream os;
    os << "classify_shape: " << ex.size() << " interior extrema at " << to_string(p) << ":";
    for (const Extremum& e : ex) os << " " << to_string(e.kind) << "@" << e.theta;
    throw UnresolvedShape(os.str());
  }

  if (ex.size() == 2) {
    report.shape_class = ShapeClass::Bimodal;
  } else if (ex.size() == 1) {
    report.shape_class = ex[0].kind == ExtremumKind::Min ? ShapeClass::InteriorMinimum
                                                          : ShapeClass::InteriorMaximum;
  } else {
    const double rise = report.value_halfpi - report.value_zero;
    if (rise > opt.flat_threshold) {
      report.shape_class = ShapeClass::MonotoneIncreasing;
    } else if (rise < -opt.flat_threshold) {
      report.shape_class = ShapeClass::MonotoneDecreasing;
    } else {
      report.shape_class = ShapeClass::Flat;
    }
  }
  return report;
}

std::optional<InteriorMinimum> interior_minimum(const StateParams& p, const ShapeOptions& options) {
  const ShapeReport report = classify_shape(p, options);
  if (const Extremum* m = report.interior_min()) return InteriorMinimum{m->theta, m->value};
  return std::nullopt;
}

EndpointSlopes endpoint_slope_check(const StateParams& p, double h) {
  const double at_zero = (post_entropy(p, h) - post_entropy(p, -h)) / (2.0 * h);
  const double at_halfpi = (post_entropy(p, kHalfPi + h) - post_entropy(p, kHalfPi - h)) / (2.0 * h);
  return {std::abs(at_zero), std::abs(at_halfpi)};
}

}  // namespace xdeficit
