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

#include "blaschke/decompose.hpp"
#include "blaschke/demos.hpp"
#include "blaschke/error.hpp"
#include "support.hpp"

using namespace blaschke;
using blaschke::testing::kPi;

namespace {

double chain_error(const CompositionChain& chain, const BlaschkeProduct& b) {
  return circle_sup_distance([&](Complex z) { return chain.evaluate(z); },
                             [&](Complex z) { return b(z); }, 100);
}

bool has_found(const DecompositionReport& r, const std::vector<int>& degrees) {
  for (const auto& a : r.attempts) {
    if (a.degrees == degrees && a.status == SearchStatus::kFound) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("degree-2 inner factors") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const CompositionChain chain = random_chain(rng, std::vector<int>{2 + trial % 3, 2});
    const BlaschkeProduct b = chain.expand();
    const auto f = inner_degree2(b);
    REQUIRE(f.has_value());
    CHECK(f->factors.inner.degree() == 2);
    CHECK(std::abs(f->factors.inner(0.0)) < 1e-12);
    CHECK(f->factors.error <= 1e-8);
    for (int k = 0; k < 16; ++k) {
      const Complex z = std::polar(1.0, 0.4 * k);
      CHECK(std::abs(f->factors.outer(f->factors.inner(z)) - b(z)) <= 1e-8);
    }
  }
  // Prime degree 3 has no degree-2 inner factor.
  CHECK_FALSE(inner_degree2(BlaschkeProduct(1.0, {0.0, 0.5, Complex(0.0, 0.3)})).has_value());
}

TEST_CASE("general inner factors") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 4; ++trial) {
    const CompositionChain chain = random_chain(rng, std::vector<int>{2, 3});
    const InnerFactorResult r = inner_factor_general(chain.expand(), 3);
    CHECK(r.status == SearchStatus::kFound);
    REQUIRE(r.factors.has_value());
    CHECK(r.factors->inner.degree() == 3);
    CHECK(r.factors->error <= 1e-8);
  }
  CHECK_THROWS_AS(inner_factor_general(BlaschkeProduct::power(6), 4), Error);
  CHECK_THROWS_AS(inner_factor_general(BlaschkeProduct::power(6), 6), Error);
}

TEST_CASE("chains of degree-2 factors round trip") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const int levels = 2 + trial % 2;
    const BlaschkeProduct b = random_quadratic_chain(rng, levels).expand();
    const DecompositionReport r = chain_2n(b);
    REQUIRE(r.chains.size() == 1);
    CHECK(static_cast<int>(r.chains[0].factors().size()) == levels);
    CHECK(chain_error(r.chains[0], b) <= 1e-8);
  }
}

TEST_CASE("decomposition report shapes") {
  const DecompositionReport ne = decompose_report(demo_product("nonexample84").product);
  CHECK(has_found(ne, {4, 2}));
  CHECK(has_found(ne, {2, 4}));
  CHECK(has_found(ne, {2, 2, 2}));
  const DecompositionReport d6 = decompose_report(demo_product("deg6nonelliptic").product);
  CHECK(has_found(d6, {2, 3}));
  std::mt19937_64 rng(64);
  const DecompositionReport prime = decompose_report(testing::random_product(rng, 5, 0.8, true));
  CHECK(prime.chains.empty());
  CHECK(prime.attempts.empty());
  const CompositionChain full = decompose_chain(demo_product("elliptical8").product);
  CHECK(full.factor_degrees() == std::vector<int>{2, 2, 2});
}

TEST_CASE("nonexample chain matches its construction") {
  const DemoProduct d = demo_product("nonexample84");
  const DecompositionReport r = chain_2n(d.product);
  REQUIRE(r.chains.size() == 1);
  const auto& f = r.chains[0].factors();
  // The two inner factors are squares up to rotation.
  for (std::size_t k = 1; k < f.size(); ++k) {
    for (const Complex& z : f[k].zeros()) CHECK(std::abs(z) < 1e-8);
  }
  // The outer factor has zeros 0 and 0.84^4 up to a rotation of the disk.
  std::vector<double> mods;
  for (const Complex& z : f[0].zeros()) mods.push_back(std::abs(z));
  std::sort(mods.begin(), mods.end());
  CHECK(mods[0] < 1e-8);
  CHECK(std::abs(mods[1] - std::pow(0.84, 4)) < 1e-8);
}

TEST_CASE("elliptical ranges come with decompositions") {
  const auto d6 = elliptical_implies_decomposable_check(demo_product("deg6elliptic").product);
  CHECK(d6.elliptical);
  CHECK(d6.consistent);
  CHECK(d6.divisors == std::vector<int>{2, 3});
  const auto n6 = elliptical_implies_decomposable_check(demo_product("deg6nonelliptic").product);
  CHECK_FALSE(n6.elliptical);
  CHECK(n6.consistent);
}
