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

#ifndef XDEFICIT_SOLVE_HPP
#define XDEFICIT_SOLVE_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace xdeficit {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of f on [lo, hi]. Stops when the
/// bracket is narrower than tol. The best point seen, including the bracket
/// ends, is returned.
template <class F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  Minimum best = f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
  const double mid = 0.5 * (a + b);
  const double fmid = f(mid);
  if (fmid < best.value) best = {mid, fmid};
  return best;
}

/// Bisection for a sign change of f on [lo, hi]. Requires f(lo) and f(hi)
/// of opposite sign (or one of them zero). Returns the midpoint of the
/// final bracket of width <= tol.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw ConvergenceError("bisect: endpoints do not bracket a sign change");
  }
  for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Bisection on a boolean predicate that is false at lo and true at hi.
/// Returns the final bracket.
template <class P>
std::pair<double, double> bisect_predicate(P&& pred, double lo, double hi, double tol) {
  for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace xdeficit

#endif  // XDEFICIT_SOLVE_HPP
