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

#include "xdeficit/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xdeficit {
namespace {

constexpr double kClampTolerance = 1e-12;
constexpr double kSumTolerance = 1e-10;

// -x log2 x for x >= 0.
inline double xlog2x_neg(double x) noexcept {
  return x > 0.0 ? -x * std::log2(x) : 0.0;
}

// Cancellation-free products of the two eigenvalue pairs. With Q = q1 + q2
// the products are
//   (1 + c)(2Q(1 - Q)(1 + c) + 4 q1 q2 (1 - c)) / 16
//   (1 - c)(2Q(1 - Q)(1 - c) + 4 q1 q2 (1 + c)) / 16
// which follow from expanding ((1 +- a c)^2 - R^2) / 16.
struct PairProducts {
  double plus;
  double minus;
};

inline PairProducts pair_products(const StateParams& p, double c) noexcept {
  const double q = p.total();
  const double mixed = 2.0 * q * p.rest();
  const double cross = 4.0 * p.q1() * p.q2();
  const double up = std::max(0.0, 1.0 + c);
  const double down = std::max(0.0, 1.0 - c);
  return {up * (mixed * up + cross * down) / 16.0,
          down * (mixed * down + cross * up) / 16.0};
}

// atanh(x / m) / x, accurate for small x.
inline double atanh_ratio(double x, double m) noexcept {
  const double t = x / m;
  if (t < 1e-6) return (1.0 + t * t / 3.0) / m;
  return std::atanh(t) / x;
}

}  // namespace

double binary_entropy(double x) {
  if (!(x >= -kClampTolerance && x <= 1.0 + kClampTolerance)) {
    std::ostringstream os;
    os << "binary_entropy argument " << x << " is outside [0, 1]";
    throw DomainError(os.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  return xlog2x_neg(x) + xlog2x_neg(1.0 - x);
}

double quaternary_entropy(std::span<const double, 4> x) {
  double sum = 0.0;
  for (double v : x) {
    if (!(v >= -kClampTolerance)) {
      std::ostringstream os;
      os << "quaternary_entropy entry " << v << " is negative";
      throw DomainError(os.str());
    }
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= kSumTolerance)) {
    std::ostringstream os;
    os << "quaternary_entropy arguments sum to " << sum << ", not 1";
    throw DomainError(os.str());
  }
  double h = 0.0;
  for (double v : x) h += xlog2x_neg(std::max(v, 0.0));
  return h;
}

double quaternary_entropy(double x1, double x2, double x3, double x4) {
  const std::array<double, 4> x{x1, x2, x3, x4};
  return quaternary_entropy(std::span<const double, 4>(x));
}

double pre_entropy(const StateParams& p) {
  return xlog2x_neg(p.q1()) + xlog2x_neg(p.q2()) + xlog2x_neg(p.rest());
}

PostSpectrum post_spectrum(const StateParams& p, double theta) noexcept {
  const double a = p.rest();
  const double b = 1.0 - 2.0 * p.total();
  const double d = p.q1() - p.q2();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const PairProducts prod = pair_products(p, c);

  PostSpectrum out{};
  out.theta = theta;

  const double r_plus = std::hypot(a + b * c, d * s);
  const double big_plus = (1.0 + a * c + r_plus) / 4.0;
  out.lambda[0] = big_plus;
  out.lambda[1] = big_plus > 0.0 ? prod.plus / big_plus : 0.0;

  const double r_minus = std::hypot(a - b * c, d * s);
  const double big_minus = (1.0 - a * c + r_minus) / 4.0;
  out.lambda[2] = big_minus;
  out.lambda[3] = big_minus > 0.0 ? prod.minus / big_minus : 0.0;
  return out;
}

double post_entropy(const StateParams& p, double theta) {
  const PostSpectrum spec = post_spectrum(p, theta);
  return quaternary_entropy(std::span<const double, 4>(spec.lambda));
}

double post_entropy_slope(const StateParams& p, double theta) {
  const double s = std::sin(theta);
  if (s == 0.0) return 0.0;
  const double c = std::cos(theta);
  const double a = p.rest();
  const double b = 1.0 - 2.0 * p.total();
  const double d2 = (p.q1() - p.q2()) * (p.q1() - p.q2());
  const PairProducts prod = pair_products(p, c);

  // Each pair is M +- R/4 with M = (1 + sign a c)/4. Writing the pair's
  // contribution through ln(big * small) and ln(big / small) keeps it finite
  // where the two eigenvalues cross (R -> 0).
  double nats = 0.0;
  for (const double sign : {1.0, -1.0}) {
    const double m = 1.0 + sign * a * c;
    const double u = a + sign * b * c;
    const double r = std::hypot(u, std::sqrt(d2) * s);
    const double r_dr = s * (d2 * c - sign * b * u);  // R dR/dtheta
    const double dm = -sign * a * s / 4.0;            // dM/dtheta
    const double product = sign > 0 ? prod.plus : prod.minus;
    const double big = (m + r) / 4.0;
    if (big <= 0.0) continue;
    if (product > 0.0) {
      const double small = product / big;
      double log_ratio_over_r;
      if (r < 0.5 * m) {
        log_ratio_over_r = 2.0 * atanh_ratio(r, m);
      } else {
        log_ratio_over_r = (std::log(big) - std::log(small)) / r;
      }
      nats -= dm * std::log(product) + 0.25 * r_dr * log_ratio_over_r;
    } else {
      // The small eigenvalue is pinned at zero; only the big one moves.
      const double dbig = dm + (r > 0.0 ? 0.25 * r_dr / r : 0.0);
      nats -= dbig * std::log(big);
    }
  }
  return nats / std::numbers::ln2;
}

double endpoint_entropy_zero(const StateParams& p) {
  const double q = p.total();
  return xlog2x_neg(p.rest()) + (q > 0.0 ? -q * std::log2(q / 2.0) : 0.0);
}

double aux_radius(const StateParams& p) noexcept {
  return std::hypot(p.rest(), p.q1() - p.q2());
}

double endpoint_entropy_halfpi(const StateParams& p) {
  const double r = std::min(aux_radius(p), 1.0);
  return 1.0 + binary_entropy((1.0 + r) / 2.0);
}

std::optional<double> s2_halfpi(const StateParams& p) {
  const double r = aux_radius(p);
  if (r < 1e-9 || r > 1.0 - 1e-9) return std::nullopt;
  const double a = p.rest();
  const double b = 1.0 - 2.0 * p.total();
  const double d = p.q1() - p.q2();
  const double r2 = r * r;
  const double log_term = 2.0 * std::atanh(r);  // ln((1 + r) / (1 - r))
  const double first = d * d / (2.0 * r2 * r) * (r2 - b * b) * log_term;
  const double second = a * a / (1.0 - r2) * (1.0 - 2.0 * b * (1.0 - b / (2.0 * r2)));
  return first - second;
}

double s2_zero_on_axis(double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    std::ostringstream os;
    os << "s2_zero_on_axis requires q in (0, 1], got " << q;
    throw DomainError(os.str());
  }
  if (q == 1.0) return 0.0;  // (1 - q) ln(1 - q) -> 0
  // (1 - 3q + 2q^2) / (2 - 3q) * ln(2(1 - q) / q), rewritten with
  // x = (2 - 3q) / q so that ln(1 + x) / x stays finite at q = 2/3.
  const double x = (2.0 - 3.0 * q) / q;
  const double log_ratio = x == 0.0 ? 1.0 : std::log1p(x) / x;
  return (1.0 - q) * (1.0 - 2.0 * q) / q * log_ratio;
}

EndpointDiagnostics endpoint_diagnostics(const StateParams& p) {
  EndpointDiagnostics out{};
  out.r = aux_radius(p);
  out.s2_halfpi = s2_halfpi(p);
  const double q = std::max(p.q1(), p.q2());
  if (p.on_axis() && q > 0.0) out.s2_zero_axis = s2_zero_on_axis(q);
  return out;
}

double family_fidelity(const StateParams& a, const StateParams& b) {
  const FamilySpectrum x = family_spectrum(a);
  const FamilySpectrum y = family_spectrum(b);
  double overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::sqrt(x.lambda[i] * y.lambda[i]);
  return std::min(1.0, overlap * overlap);
}

}  // namespace xdeficit
