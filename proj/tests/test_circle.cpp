/*
Copyright 2026 The Blaschke Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "blaschke/circle.hpp"
#include "blaschke/error.hpp"
#include "support.hpp"

using namespace blaschke;
using blaschke::testing::kPi;

TEST_CASE("circle solutions of z^n are rotated roots of unity") {
  for (int n = 1; n <= 9; ++n) {
    const double theta = 0.7;
    const CircleSolutionSet s = solve_on_circle(BlaschkeProduct::power(n), std::polar(1.0, theta));
    REQUIRE(static_cast<int>(s.angles.size()) == n);
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(s.angles[k] - (theta + 2.0 * kPi * k) / n) < 1e-12);
    }
  }
}

TEST_CASE("circle solutions agree with a brute-force scan") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 2 + trial % 8, 0.9);
    const Complex lambda = random_unimodular(rng);
    const CircleSolutionSet s = solve_on_circle(b, lambda);
    std::vector<double> ref = testing::brute_circle_solutions(b, lambda);
    std::sort(ref.begin(), ref.end());
    REQUIRE(ref.size() == s.angles.size());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(ref[k] - s.angles[k]) < 1e-9);
    for (const Complex& z : s.points) CHECK(std::abs(b(z) - lambda) <= 1e-10);
  }
  CHECK_THROWS_AS(solve_on_circle(BlaschkeProduct::power(2), 0.5), Error);
}

TEST_CASE("lifted argument is increasing with the stated derivative") {
  std::mt19937_64 rng(22);
  const BlaschkeProduct b = testing::random_product(rng, 6, 0.95);
  double prev = lifted_argument(b, 0.0);
  CHECK(prev >= 0.0);
  CHECK(prev < 2.0 * kPi);
  for (int k = 1; k <= 400; ++k) {
    const double t = 2.0 * kPi * k / 400.0;
    const double v = lifted_argument(b, t);
    CHECK(v > prev);
    prev = v;
    const double h = 1e-6;
    const double fd = (lifted_argument(b, t + h) - lifted_argument(b, t - h)) / (2.0 * h);
    CHECK(std::abs(fd - lifted_argument_derivative(b, t)) <=
          1e-5 * lifted_argument_derivative(b, t));
  }
  CHECK(std::abs(lifted_argument(b, 2.0 * kPi) - lifted_argument(b, 0.0) - 12.0 * kPi) < 1e-9);
}

TEST_CASE("next preimage steps counterclockwise through the fiber") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 3 + trial % 6, 0.97);
    for (int k = 0; k < 16; ++k) {
      const Complex z = std::polar(1.0, 2.0 * kPi * (k + 0.5) / 16.0);
      const CircleSolutionSet s = solve_on_circle(b, b(z));
      const Complex w = next_preimage(b, z);
      CHECK(std::abs(b(w) - b(z)) <= 1e-9);
      // w is the first fiber point after z going counterclockwise.
      const double tz = std::arg(z);
      auto ahead = [&](Complex p) {
        double d = std::arg(p) - tz;
        while (d <= 1e-9) d += 2.0 * kPi;
        return d;
      };
      double best = 10.0;
      for (const Complex& p : s.points) best = std::min(best, ahead(p));
      CHECK(std::abs(ahead(w) - best) < 1e-9);
      CHECK(std::abs(preimage_power(b, z, b.degree()) - z) <= 1e-9);
    }
  }
}

TEST_CASE("group of invariants") {
  const InvariantGroup sq = invariant_group(BlaschkeProduct::power(2));
  CHECK(sq.order == 2);
  CHECK(sq.cyclic);
  // The generator of z^2 is -z.
  const Complex z = std::polar(1.0, 0.4);
  CHECK(std::abs(next_preimage(BlaschkeProduct::power(2), z) + z) < 1e-12);
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 6; ++trial) {
    const InvariantGroup g = invariant_group(testing::random_product(rng, 2 + trial, 0.9));
    CHECK(g.cyclic);
    CHECK(g.order == 2 + trial);
    CHECK(g.identity_errors.back() <= 1e-9);
  }
}

TEST_CASE("generator power equals the inner involution") {
  std::mt19937_64 rng(25);
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s < 3; ++s) {
      const GeneratorPowerCheck c = verify_generator_power(random_quadratic_chain(rng, n));
      CHECK(c.holds);
      CHECK(c.power == (1 << (n - 1)));
      CHECK(c.error <= 1e-9);
    }
  }
  const CompositionChain odd({BlaschkeProduct::power(3)});
  CHECK_THROWS_AS(verify_generator_power(odd), Error);
}

TEST_CASE("chord through an interior point") {
  const Complex a(0.3, -0.2);
  for (int k = 0; k < 12; ++k) {
    const Complex z = std::polar(1.0, 2.0 * kPi * k / 12.0 + 0.1);
    const Complex w = chord_second_intersection(a, z);
    CHECK(std::abs(std::abs(w) - 1.0) < 1e-14);
    // z, a, w are collinear and a lies between them.
    CHECK(std::abs(std::imag((a - z) * std::conj(w - z))) < 1e-12);
    CHECK(std::abs(std::abs(w - z) - std::abs(w - a) - std::abs(a - z)) < 1e-12);
    // The involution phi_a maps z to that point.
    CHECK(std::abs(DiskAutomorphism::involution(a)(z) - w) < 1e-12);
  }
}
