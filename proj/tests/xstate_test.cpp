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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sampling.hpp"
#include "xdeficit/xstate.hpp"

using namespace xdeficit;
using doctest::Approx;

TEST_SUITE("xstate") {
  TEST_CASE("state params enforce the triangle") {
    CHECK_NOTHROW(StateParams(0.0, 0.0));
    CHECK_NOTHROW(StateParams(0.4, 0.6));
    CHECK_NOTHROW(StateParams(-1e-13, 0.5));
    CHECK_THROWS_AS(StateParams(-1e-6, 0.5), DomainError);
    CHECK_THROWS_AS(StateParams(0.6, 0.6), DomainError);
    CHECK_THROWS_AS(StateParams(std::nan(""), 0.1), DomainError);

    const StateParams edge(0.3, 0.7 + 5e-13);
    CHECK(edge.rest() == 0.0);
    CHECK(StateParams(-1e-13, 0.2).q1() == 0.0);
  }

  TEST_CASE("family spectrum") {
    const auto s = family_spectrum(StateParams(0.3, 0.2));
    CHECK(s.lambda[0] == Approx(0.5));
    CHECK(s.lambda[1] == Approx(0.3));
    CHECK(s.lambda[2] == Approx(0.2));
    CHECK(s.lambda[3] == 0.0);
  }

  TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    // mpmath, 40 digits
    CHECK(binary_entropy(0.61554) == Approx(0.961131169192319).epsilon(1e-13));
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(-0.01), DomainError);
    CHECK_NOTHROW(binary_entropy(-1e-13));
  }

  TEST_CASE("quaternary entropy") {
    CHECK(quaternary_entropy(0.25, 0.25, 0.25, 0.25) == Approx(2.0));
    CHECK(quaternary_entropy(1, 0, 0, 0) == 0.0);
    CHECK(quaternary_entropy(0.5, 0, 0.5, 0) == Approx(1.0));
    CHECK(quaternary_entropy(0.5, -1e-13, 0.5, 1e-13) == Approx(1.0));
    CHECK_THROWS_AS(quaternary_entropy(0.5, 0.5, 0.5, 0), DomainError);
    CHECK_THROWS_AS(quaternary_entropy(1.1, -0.1, 0, 0), DomainError);
  }

  TEST_CASE("pre-measurement entropy") {
    CHECK(pre_entropy(StateParams(1.0 / 3, 1.0 / 3)) == Approx(std::log2(3.0)).epsilon(1e-14));
    CHECK(pre_entropy(StateParams(1, 0)) == 0.0);
    CHECK(pre_entropy(StateParams(0.61554, 0)) == Approx(binary_entropy(0.61554)).epsilon(1e-15));
  }

  TEST_CASE("post spectrum closed cases") {
    const auto bell = post_spectrum(StateParams(1, 0), kPi / 4);
    CHECK(bell.lambda[0] == Approx(0.5).epsilon(1e-15));
    CHECK(bell.lambda[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(bell.lambda[2] == Approx(0.5).epsilon(1e-15));
    CHECK(bell.lambda[3] == doctest::Approx(0.0).epsilon(1e-15));

    const auto product = post_spectrum(StateParams(0, 0), 0.0);
    CHECK(product.lambda[0] == 1.0);
    CHECK(product.lambda[1] == 0.0);
    CHECK(product.lambda[2] == 0.0);
    CHECK(product.lambda[3] == 0.0);

    // theta = 0: {1 - q, q/2, q/2, 0}
    const auto zero = post_spectrum(StateParams(0.3, 0.2), 0.0);
    CHECK(zero.lambda[0] == Approx(0.5));
    CHECK(zero.lambda[1] == Approx(0.25));
    CHECK(zero.lambda[2] == Approx(0.25));
    CHECK(zero.lambda[3] == 0.0);
  }

  TEST_CASE("post entropy landmarks") {
    CHECK(post_entropy(StateParams(0.5, 0.5), kHalfPi) == Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(post_entropy(StateParams(0.61554, 0), 0.0) - 1.57667) < 1e-4);
    CHECK(std::abs(post_entropy(StateParams(0.61554, 0), kHalfPi) - 1.57667) < 1e-4);
  }

  TEST_CASE("endpoint closed forms") {
    CHECK(endpoint_entropy_zero(StateParams(0.5, 0)) == Approx(1.5).epsilon(1e-15));
    CHECK(endpoint_entropy_zero(StateParams(0, 0)) == 0.0);
    CHECK(endpoint_entropy_zero(StateParams(0.61554, 0)) == Approx(1.57667116919232).epsilon(1e-13));
    CHECK(endpoint_entropy_halfpi(StateParams(0, 0)) == Approx(1.0));
    CHECK(endpoint_entropy_halfpi(StateParams(0.5, 0.5)) == Approx(2.0));
    CHECK(endpoint_entropy_halfpi(StateParams(0.61554, 0)) == Approx(1.5766725074968).epsilon(1e-13));
  }

  TEST_CASE("curvature diagnostics") {
    const auto axis_half = endpoint_diagnostics(StateParams(0.5, 0));
    REQUIRE(axis_half.s2_zero_axis);
    CHECK(*axis_half.s2_zero_axis == 0.0);

    const auto corner = endpoint_diagnostics(StateParams(1, 0));
    REQUIRE(corner.s2_zero_axis);
    CHECK(*corner.s2_zero_axis == 0.0);
    CHECK_FALSE(corner.s2_halfpi);  // r = 1

    // 0.3 ln 6
    CHECK(s2_zero_on_axis(0.25) == Approx(0.537527840768).epsilon(1e-12));
    // removable singularity at q = 2/3: limit (1/3)(-1/3)(3/2)
    CHECK(s2_zero_on_axis(2.0 / 3.0) == Approx(-1.0 / 6.0).epsilon(1e-12));
    CHECK(s2_zero_on_axis(2.0 / 3.0 + 1e-9) == Approx(-1.0 / 6.0).epsilon(1e-7));
    CHECK_THROWS_AS(s2_zero_on_axis(0.0), DomainError);

    CHECK_FALSE(endpoint_diagnostics(StateParams(0.3, 0.2)).s2_zero_axis);
    CHECK_FALSE(endpoint_diagnostics(StateParams(0.5, 0.5)).s2_halfpi);  // r = 0
    CHECK_FALSE(endpoint_diagnostics(StateParams(0, 0)).s2_zero_axis);

    const auto hp = s2_halfpi(StateParams(0.67515, 0));
    REQUIRE(hp);
    CHECK(std::abs(*hp) < 1e-4);
  }

  TEST_CASE("curvature formulas match second differences") {
    // Second differences of post_entropy in nats, using the even extension.
    testing::TriangleSampler gen(7);
    const double h = 1e-4;
    for (int i = 0; i < 200; ++i) {
      const StateParams p = gen.next();
      const auto hp = s2_halfpi(p);
      if (!hp || aux_radius(p) > 0.99 || aux_radius(p) < 0.01) continue;
      const double fd = 2.0 * (post_entropy(p, kHalfPi - h) - post_entropy(p, kHalfPi)) / (h * h) *
                        std::numbers::ln2;
      CHECK(*hp == Approx(fd).epsilon(1e-4).scale(1.0));
    }
    for (double q : {0.05, 0.25, 0.4, 0.6, 2.0 / 3.0, 0.7, 0.8, 0.95}) {
      const StateParams p(q, 0);
      const double fd = 2.0 * (post_entropy(p, h) - post_entropy(p, 0.0)) / (h * h) * std::numbers::ln2;
      CHECK(s2_zero_on_axis(q) == Approx(fd).epsilon(1e-5).scale(1.0));
    }
  }

  TEST_CASE("fidelity") {
    CHECK(std::abs(family_fidelity(StateParams(0.5, 0), StateParams(0.67515, 0)) - 0.968) < 1e-3);
    CHECK(family_fidelity(StateParams(0.5, 0), StateParams(0.67515, 0)) ==
          Approx(0.96831877765).epsilon(1e-10));
    CHECK(family_fidelity(StateParams(0.3, 0.2), StateParams(0.3, 0.2)) == Approx(1.0));
    CHECK(family_fidelity(StateParams(1, 0), StateParams(0, 1)) == 0.0);
  }

  TEST_CASE("slope matches finite differences") {
    testing::TriangleSampler gen(11);
    const double h = 1e-6;
    for (int i = 0; i < 300; ++i) {
      const StateParams p = gen.next();
      const double t = gen.uniform(0.01, kHalfPi - 0.01);
      const double fd = (post_entropy(p, t + h) - post_entropy(p, t - h)) / (2 * h);
      CHECK(post_entropy_slope(p, t) == Approx(fd).epsilon(1e-6).scale(1.0));
    }
    CHECK(post_entropy_slope(StateParams(0.3, 0.2), 0.0) == 0.0);
    // the pure corner and the product state stay finite
    CHECK(std::isfinite(post_entropy_slope(StateParams(0, 0), 0.7)));
    CHECK(std::isfinite(post_entropy_slope(StateParams(1, 0), 0.7)));
    CHECK(std::isfinite(post_entropy_slope(StateParams(0.25, 0.25), 0.9)));
  }
}

TEST_SUITE("xstate properties") {
  TEST_CASE("normalization") {
    testing::TriangleSampler gen(1);
    for (int i = 0; i < 10000; ++i) {
      const StateParams p = gen.next();
      const auto s = post_spectrum(p, gen.uniform(0.0, kHalfPi));
      double sum = 0.0;
      for (double v : s.lambda) {
        CHECK(v >= -1e-12);
        sum += v;
      }
      CHECK(std::abs(sum - 1.0) < 1e-10);
    }
  }

  TEST_CASE("exchange and reflection symmetry") {
    testing::TriangleSampler gen(2);
    for (int i = 0; i < 2000; ++i) {
      const StateParams p = gen.next();
      const double t = gen.uniform(0.0, kHalfPi);
      CHECK(std::abs(post_entropy(p, t) - post_entropy(p.swapped(), t)) < 1e-12);
      CHECK(std::abs(post_entropy(p, t) - post_entropy(p, kPi - t)) < 1e-12);
    }
  }

  TEST_CASE("endpoint consistency") {
    testing::TriangleSampler gen(3);
    for (int i = 0; i < 2000; ++i) {
      const StateParams p = gen.next();
      CHECK(std::abs(endpoint_entropy_zero(p) - post_entropy(p, 0.0)) < 1e-12);
      CHECK(std::abs(endpoint_entropy_halfpi(p) - post_entropy(p, kHalfPi)) < 1e-12);
    }
  }

  TEST_CASE("on the axis the theta = 0 deficit equals q") {
    for (int i = 0; i <= 100; ++i) {
      const double q = i / 100.0;
      const StateParams p(q, 0.0);
      CHECK(std::abs(endpoint_entropy_zero(p) - pre_entropy(p) - q) < 1e-12);
      CHECK(std::abs(endpoint_entropy_zero(p.swapped()) - pre_entropy(p.swapped()) - q) < 1e-12);
    }
  }

  TEST_CASE("measurement never lowers the entropy") {
    testing::TriangleSampler gen(4);
    for (int i = 0; i < 5000; ++i) {
      const StateParams p = gen.next();
      CHECK(post_entropy(p, gen.uniform(0.0, kHalfPi)) >= pre_entropy(p) - 1e-10);
    }
  }

  TEST_CASE("endpoints are stationary") {
    testing::TriangleSampler gen(5);
    const double h = 1e-5;
    for (int i = 0; i < 500; ++i) {
      const StateParams p = gen.next();
      if (std::max(p.q1(), p.q2()) > 0.99 || p.total() < 0.01) continue;
      const double at_zero = (post_entropy(p, h) - post_entropy(p, -h)) / (2 * h);
      const double at_half = (post_entropy(p, kHalfPi + h) - post_entropy(p, kHalfPi - h)) / (2 * h);
      CHECK(std::abs(at_zero) < 1e-6);
      CHECK(std::abs(at_half) < 1e-6);
      // The analytic slope vanishes like theta log theta at 0 and like
      // (pi/2 - theta) at pi/2.
      CHECK(std::abs(post_entropy_slope(p, 1e-8)) < 1e-5);
      CHECK(std::abs(post_entropy_slope(p, kHalfPi - 1e-8)) < 1e-6);
    }
  }
}
