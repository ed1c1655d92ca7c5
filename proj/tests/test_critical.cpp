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

#include "blaschke/critical.hpp"
#include "blaschke/error.hpp"
#include "support.hpp"

using namespace blaschke;

TEST_CASE("critical points of powers") {
  for (int n = 2; n <= 8; ++n) {
    const CriticalData d = critical_data(BlaschkeProduct::power(n));
    CHECK(static_cast<int>(d.points.size()) == n - 1);
    for (const Complex& c : d.points) CHECK(std::abs(c) < 1e-12);
    REQUIRE(d.distinct_values.size() == 1);
    CHECK(std::abs(d.distinct_values[0].value) < 1e-12);
  }
}

TEST_CASE("critical points are zeros of B' and there are n - 1 of them") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 2 + trial % 9, 0.9);
    const CriticalData d = critical_data(b);
    CHECK(static_cast<int>(d.points.size()) == b.degree() - 1);
    for (std::size_t k = 0; k < d.points.size(); ++k) {
      const Complex c = d.points[k];
      CHECK(std::abs(c) < 1.0);
      // Finite-difference derivative stays an independent check.
      CHECK(std::abs(testing::central_difference(b, c, 1e-6)) < 1e-6);
      CHECK(std::abs(d.values[k] - testing::naive_evaluate(b, c)) < 1e-10);
    }
  }
}

TEST_CASE("derivative numerator matches P'Q - PQ'") {
  const BlaschkeProduct b(1.0, {Complex(0.2, 0.1), -0.4, Complex(0.0, 0.6)});
  const Polynomial num = derivative_numerator(b);
  for (int k = 0; k < 5; ++k) {
    const Complex z(0.1 * k, -0.05 * k);
    Complex p = 1.0, q = 1.0, dp = 0.0, dq = 0.0;
    for (const Complex& a : b.zeros()) {
      dp = dp * (z - a) + p;
      p *= z - a;
      dq = dq * (1.0 - std::conj(a) * z) - std::conj(a) * q;
      q *= 1.0 - std::conj(a) * z;
    }
    CHECK(std::abs(poly_eval(num, z) - (dp * q - p * dq)) < 1e-12);
  }
}

TEST_CASE("repeated zeros give repeated critical points") {
  const BlaschkeProduct b(1.0, {0.3, 0.3, 0.3, -0.5});
  const CriticalData d = critical_data(b);
  int at_zero = 0;
  for (const Complex& c : d.points) at_zero += std::abs(c - 0.3) < 1e-9 ? 1 : 0;
  CHECK(at_zero == 2);
  CHECK(d.points.size() == 3);
}

TEST_CASE("Walsh hull membership") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 2 + trial % 11, 0.9, true);
    for (const Complex& c : critical_data(b).points) CHECK(walsh_hull_distance(b, c) <= 1e-9);
  }
  const BlaschkeProduct b(1.0, {0.0, 0.5});
  CHECK(std::abs(walsh_hull_distance(b, Complex(0.25, 0.5)) - 0.5) < 1e-15);
}

TEST_CASE("critical value bound for chains") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<int> degrees{2 + trial % 2, 2, 2 + trial % 3};
    const ValueBound v = check_value_bound(random_chain(rng, degrees));
    CHECK(v.bound == (degrees[0] - 1) + (degrees[1] - 1) + (degrees[2] - 1));
    CHECK(v.satisfied);
    CHECK(v.distinct_values <= v.bound);
  }
}

TEST_CASE("critical count for degree-27 and degree-12 chains") {
  // These seeds produced nearby critical pairs close to the circle.
  for (unsigned seed : {15u, 191u, 595u}) {
    std::mt19937_64 rng(seed);
    std::vector<int> degrees;
    const int length = 2 + static_cast<int>(seed % 2);
    for (int i = 0; i < length; ++i) degrees.push_back(2 + static_cast<int>((seed / (i + 2)) % 2));
    const BlaschkeProduct b = random_chain(rng, degrees).expand();
    const CriticalData data = critical_data(b);
    CHECK(static_cast<int>(data.points.size()) == b.degree() - 1);
    for (const Complex& z : data.points) CHECK(std::abs(b.derivative(z)) < 1e-7);
  }
}

TEST_CASE("single critical value form and factoring in any order") {
  const Complex a(0.3, 0.2);
  const DiskAutomorphism tau(std::polar(1.0, 0.8), Complex(0.1, -0.2));
  // tau o phi_a^6
  const std::vector<Complex> phi6(6, a);
  const BlaschkeProduct b = compose(tau, BlaschkeProduct(1.0, phi6));
  const auto form = one_critical_value_form(b);
  REQUIRE(form.has_value());
  CHECK(std::abs(form->a - a) < 1e-8);
  CHECK(form->error < 1e-8);
  for (const std::vector<int>& degrees : {std::vector<int>{2, 3}, std::vector<int>{3, 2},
                                         std::vector<int>{6}, std::vector<int>{2, 1, 3}}) {
    const CompositionChain chain = factor_any_order(b, degrees);
    CHECK(chain.degree() == 6);
    for (int k = 0; k < 32; ++k) {
      const Complex z = std::polar(1.0, 0.2 * k);
      CHECK(std::abs(chain.evaluate(z) - b(z)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(factor_any_order(b, std::vector<int>{4, 2}), Error);
  const BlaschkeProduct two_values(1.0, {0.0, 0.5, Complex(0.0, 0.5)});
  CHECK_FALSE(one_critical_value_form(two_values).has_value());
}

TEST_CASE("cluster_points groups by single linkage") {
  const std::vector<Complex> pts{0.0, 1e-10, 2e-10, 0.5, 0.5 + 1e-11};
  const auto c = cluster_points(pts, 1e-9);
  REQUIRE(c.size() == 2);
  CHECK(c[0].multiplicity + c[1].multiplicity == 5);
}
