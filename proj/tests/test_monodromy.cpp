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

#include <cmath>

#include "blaschke/critical.hpp"
#include "blaschke/demos.hpp"
#include "blaschke/error.hpp"
#include "blaschke/monodromy.hpp"
#include "support.hpp"

using namespace blaschke;

namespace {

std::vector<Complex> sample_loop(const LoopSpec& loop) {
  std::vector<Complex> out;
  for (const PathPiece& p : loop.pieces) {
    for (int k = 0; k < 200; ++k) out.push_back(p.point(k / 200.0));
  }
  out.push_back(loop.pieces.back().point(1.0));
  return out;
}

}  // namespace

TEST_CASE("loops are closed and wind once around their own value") {
  const std::vector<Complex> values{Complex(0.3, 0.0), Complex(0.6, 0.01), Complex(-0.2, 0.5),
                                    Complex(0.0, -0.7)};
  const std::vector<LoopSpec> loops = build_loops(values);
  REQUIRE(loops.size() == values.size());
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const std::vector<Complex> path = sample_loop(loops[i]);
    CHECK(std::abs(path.front()) < 1e-15);
    CHECK(std::abs(path.back()) < 1e-12);
    for (std::size_t k = 1; k + 1 < loops[i].pieces.size(); ++k) {
      CHECK(std::abs(loops[i].pieces[k].from - loops[i].pieces[k - 1].to) < 1e-12);
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
      CHECK(testing::winding_number(path, values[j]) == (i == j ? 1 : 0));
      for (const Complex& p : path) CHECK(std::abs(p - values[j]) > 0.4 * loops[j].radius);
    }
    for (const Complex& p : path) CHECK(std::abs(p) < 1.0);
  }
  const std::vector<Complex> clash{0.3, 0.3 + 1e-12};
  CHECK_THROWS_AS(build_loops(clash), Error);
  const std::vector<Complex> base{0.0};
  CHECK_THROWS_AS(build_loops(base), Error);
}

TEST_CASE("path pieces") {
  std::vector<Complex> values{0.5};
  const LoopSpec loop = build_loops(values)[0];
  for (const PathPiece& p : loop.pieces) {
    const double h = 1e-6;
    const Complex fd = (p.point(0.5 + h) - p.point(0.5 - h)) / (2.0 * h);
    CHECK(std::abs(fd - p.velocity(0.5)) < 1e-6);
    CHECK(p.length() >= 0.0);
  }
}

TEST_CASE("single critical value gives an n-cycle") {
  for (int n = 2; n <= 6; ++n) {
    const MonodromyResult m = monodromy_group(BlaschkeProduct(1.0, std::vector<Complex>(n, 0.3)));
    CHECK(m.normalized);
    REQUIRE(m.generators.size() == 1);
    CHECK(m.generators[0].cycle_type() == std::vector<int>{n});
    CHECK(m.group.order() == static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("generators match critical values and the group is transitive") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const BlaschkeProduct b = normalize(testing::random_product(rng, 3 + trial % 4, 0.8)).product;
    const MonodromyResult m = monodromy_group(b);
    CHECK_FALSE(m.normalized);
    CHECK(m.generators.size() == critical_data(b).distinct_values.size());
    CHECK(m.group.is_transitive());
  }
}

TEST_CASE("continuation is stable under step halving") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 6; ++trial) {
    const BlaschkeProduct b = random_quadratic_chain(rng, 2 + trial % 2).expand();
    TrackingOptions fine;
    fine.max_step = 0.01;
    const MonodromyResult coarse = monodromy_group(b);
    const MonodromyResult halved = monodromy_group(b, fine);
    CHECK(coarse.generators == halved.generators);
  }
}

TEST_CASE("continuation ends on the fiber") {
  const BlaschkeProduct b = demo_product("chain3").product;
  const auto values = critical_data(b).distinct_values;
  std::vector<Complex> v;
  for (const auto& c : values) v.push_back(c.value);
  const auto loops = build_loops(v);
  for (const Complex& start : branch_labels(b)) {
    const Complex end = continue_branch(b, loops[0], start);
    CHECK(std::abs(b(end)) < 1e-10);
  }
}

TEST_CASE("cross validation of blocks and factors") {
  const MonodromyResult z4 = monodromy_group(BlaschkeProduct::power(4));
  const CrossValidation cv = cross_validate(z4.product, z4);
  CHECK(cv.agree);
  REQUIRE(cv.inner_degrees == std::vector<int>{2});
  CHECK(cv.has_block_system[0]);

  const MonodromyResult ne = monodromy_group(demo_product("nonexample84").product);
  const CrossValidation cn = cross_validate(ne.product, ne);
  CHECK(cn.agree);
  CHECK(cn.inner_degrees == std::vector<int>{2, 4});
  CHECK(cn.has_block_system[0]);
  CHECK(cn.has_block_system[1]);

  std::mt19937_64 rng(73);
  const BlaschkeProduct p = normalize(testing::random_product(rng, 5, 0.8)).product;
  const MonodromyResult m5 = monodromy_group(p);
  CHECK(block_systems(m5.group).empty());
  CHECK(cross_validate(p, m5).inner_degrees.empty());
}
