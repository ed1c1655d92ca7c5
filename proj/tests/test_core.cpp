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
#include "blaschke/polynomial.hpp"
#include "blaschke/product.hpp"
#include "support.hpp"

using namespace blaschke;
using blaschke::testing::kPi;

namespace {

Complex circle(int k, int n) { return std::polar(1.0, 2.0 * kPi * (k + 0.37) / n); }

}  // namespace

TEST_CASE("construction rejects bad data") {
  CHECK_THROWS_AS(BlaschkeProduct(Complex(1.1, 0.0), {0.1}), Error);
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {}), Error);
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {Complex(1.0, 0.0)}), Error);
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {Complex(std::nan(""), 0.0)}), Error);
  try {
    BlaschkeProduct(1.0, {Complex(0.0, 2.0)});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
  }
  // Slightly off unimodular gamma is renormalized.
  const BlaschkeProduct b(Complex(1.0 + 1e-13, 0.0), {0.2});
  CHECK(std::abs(std::abs(b.gamma()) - 1.0) < 1e-15);
}

TEST_CASE("tolerance config invariants") {
  ToleranceConfig t;
  CHECK_NOTHROW(t.validate());
  t.cluster_tol = 1e-14;
  CHECK_THROWS_AS(t.validate(), Error);
  t = {};
  t.root_tol = -1.0;
  CHECK_THROWS_AS(t.validate(), Error);
  t = {};
  t.circle_samples = 0;
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("evaluation matches the definition and is unimodular on the circle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 1 + trial % 12, 0.95);
    for (int k = 0; k < 64; ++k) {
      const Complex z = circle(k, 64);
      CHECK(std::abs(std::abs(b.evaluate(z)) - 1.0) <= 1e-12);
      CHECK(std::abs(b.evaluate(z) - testing::naive_evaluate(b, z)) <= 1e-12);
      const Complex inside = 0.7 * z;
      CHECK(std::abs(b.evaluate(inside) - testing::naive_evaluate(b, inside)) <= 1e-12);
    }
  }
}

TEST_CASE("evaluation near a pole reports pole proximity") {
  const Complex a(0.5, 0.0);
  const BlaschkeProduct b(1.0, {a});
  try {
    (void)b.evaluate(1.0 / std::conj(a));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPoleProximity);
  }
}

TEST_CASE("derivative matches finite differences") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 32; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 2 + trial % 7, 0.8);
    const Complex z = random_disk_point(rng, 0.0, 0.9);
    const Complex fd = testing::central_difference(b, z, 1e-6);
    const Complex d = b.derivative(z);
    if (std::abs(fd) < 1e-3) continue;
    CHECK(std::abs(d - fd) <= 1e-5 * std::abs(fd));
    ++checked;
  }
  CHECK(checked >= 20);
  // At a zero the product rule branch is used.
  const BlaschkeProduct b(1.0, {0.3, Complex(0.1, 0.4)});
  const Complex fd = testing::central_difference(b, 0.3, 1e-6);
  CHECK(std::abs(b.derivative(0.3) - fd) <= 1e-6);
}

TEST_CASE("involutions are self-inverse and automorphisms compose") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex a = random_disk_point(rng, 0.0, 0.95);
    const DiskAutomorphism phi = DiskAutomorphism::involution(a);
    const DiskAutomorphism psi(random_unimodular(rng), random_disk_point(rng, 0.0, 0.9));
    const DiskAutomorphism both = compose(phi, psi);
    const DiskAutomorphism inv = psi.inverse();
    for (int k = 0; k < 32; ++k) {
      const Complex z = circle(k, 32);
      CHECK(std::abs(phi(phi(z)) - z) <= 1e-12);
      CHECK(std::abs(both(z) - phi(psi(z))) <= 1e-12);
      CHECK(std::abs(inv(psi(z)) - z) <= 1e-12);
      // (a - z)/(1 - conj(a) z) by hand.
      CHECK(std::abs(phi(z) - (a - z) / (1.0 - std::conj(a) * z)) <= 1e-14);
    }
  }
  CHECK(std::abs(DiskAutomorphism::identity()(Complex(0.3, 0.2)) - Complex(0.3, 0.2)) < 1e-16);
}

TEST_CASE("fixed points of automorphisms") {
  CHECK(std::abs(fixed_point(DiskAutomorphism::involution(0.0))) < 1e-15);
  CHECK(std::abs(fixed_point(DiskAutomorphism::involution(0.8)) - 0.5) < 1e-12);
  // z -> (z - 1/2)/(1 - z/2) fixes only +-1.
  try {
    (void)fixed_point(DiskAutomorphism(-1.0, 0.5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoInteriorFixedPoint);
  }
}

TEST_CASE("compose expands and is associative") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 8; ++trial) {
    const BlaschkeProduct f = testing::random_product(rng, 2, 0.8);
    const BlaschkeProduct g = testing::random_product(rng, 2, 0.8);
    const BlaschkeProduct h = testing::random_product(rng, 1 + trial % 3, 0.8);
    const BlaschkeProduct left = compose(compose(f, g), h);
    const BlaschkeProduct right = compose(f, compose(g, h));
    CHECK(left.degree() == f.degree() * g.degree() * h.degree());
    for (int k = 0; k < 64; ++k) {
      const Complex z = circle(k, 64);
      CHECK(std::abs(left(z) - right(z)) <= 1e-9);
      CHECK(std::abs(left(z) - f(g(h(z)))) <= 1e-9);
    }
  }
}

TEST_CASE("composition chains") {
  const CompositionChain chain({BlaschkeProduct::power(2), BlaschkeProduct(1.0, {0.0, 0.5})});
  CHECK(chain.degree() == 4);
  CHECK(chain.factor_degrees() == std::vector<int>{2, 2});
  const BlaschkeProduct b = chain.expand();
  for (int k = 0; k < 16; ++k) {
    const Complex z = circle(k, 16);
    CHECK(std::abs(b(z) - chain.evaluate(z)) <= 1e-12);
  }
  CHECK_THROWS_AS(CompositionChain({}), Error);
}

TEST_CASE("fibers solve B(z) = w") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const BlaschkeProduct b = testing::random_product(rng, 3 + trial % 5, 0.9);
    const Complex w = random_disk_point(rng, 0.0, 0.9);
    const std::vector<Complex> z = fiber(b, w);
    CHECK(static_cast<int>(z.size()) == b.degree());
    for (const Complex& p : z) CHECK(std::abs(b(p) - w) <= 1e-10);
  }
  CHECK(fiber(BlaschkeProduct::power(3), 0.0).size() == 3);
  CHECK_THROWS_AS(fiber(BlaschkeProduct::power(3), 1.5), Error);
}

TEST_CASE("hat and rotate") {
  const BlaschkeProduct b(1.0, {0.2, Complex(0.0, 0.5)});
  const BlaschkeProduct h = hat(b);
  const BlaschkeProduct r = rotate(b, Complex(0.0, 1.0));
  CHECK(h.degree() == 3);
  const Complex z = circle(3, 10);
  CHECK(std::abs(h(z) - z * b(z)) < 1e-14);
  CHECK(std::abs(r(z) - Complex(0.0, 1.0) * b(z)) < 1e-14);
}

TEST_CASE("normal form") {
  std::mt19937_64 rng(16);
  std::vector<BlaschkeProduct> cases{BlaschkeProduct::power(2), BlaschkeProduct::power(5),
                                     BlaschkeProduct(1.0, std::vector<Complex>(5, 0.3))};
  for (int k = 0; k < 6; ++k) cases.push_back(testing::random_product(rng, 2 + k, 0.8));
  for (const BlaschkeProduct& b : cases) {
    const NormalizedForm nf = normalize(b);
    const BlaschkeProduct& n = nf.product;
    CHECK(std::abs(n(0.0)) <= 1e-10);
    const Complex d0 = n.derivative(0.0);
    CHECK(d0.real() > 0.0);
    CHECK(std::abs(d0.imag()) <= 1e-10 * std::abs(d0));
    CHECK(cluster_points(n.zeros(), 1e-8).size() == n.zeros().size());
    for (int k = 0; k < 32; ++k) {
      const Complex z = circle(k, 32);
      CHECK(std::abs(nf.outer(b(nf.inner(z))) - n(z)) <= 1e-10);
      // Unwinding recovers B.
      CHECK(std::abs(nf.outer.inverse()(n(nf.inner(z))) - b(z)) <= 1e-10);
    }
  }
}

TEST_CASE("regularized products") {
  const RegularizedCheck sq = is_regularized(BlaschkeProduct::power(2));
  CHECK(sq.vanishes_at_zero);
  // z^2 has a double zero.
  CHECK_FALSE(sq.simple_zeros);
  const std::vector<Complex> bad{0.3, 0.6};
  const auto w = positive_ratio_pairs(bad);
  REQUIRE(w.size() == 1);
  CHECK(std::abs(w[0].first - 0.3) < 1e-15);
  CHECK(std::abs(w[0].second - 0.6) < 1e-15);
  const std::vector<Complex> good{0.3, Complex(-0.2, 0.1)};
  CHECK(positive_ratio_pairs(good).empty());
  const NormalizedForm nf = normalize(BlaschkeProduct(1.0, {0.0, 0.5}));
  CHECK(is_regularized(nf.product).regularized);
}

TEST_CASE("polynomial roots") {
  SUBCASE("simple roots") {
    const std::vector<Complex> r{Complex(0.3, 0.1), Complex(-0.7, 0.2), 2.0, Complex(0.0, -1.5)};
    const PolynomialRoots got = polynomial_roots(poly_from_roots(r));
    REQUIRE(got.roots.size() == 4);
    for (const Complex& x : r) {
      double best = 1.0;
      for (const Complex& y : got.roots) best = std::min(best, std::abs(x - y));
      CHECK(best < 1e-12);
    }
  }
  SUBCASE("multiple roots cluster") {
    const std::vector<Complex> r{0.3, 0.3, 0.3, -0.5};
    const PolynomialRoots got = polynomial_roots(poly_from_roots(r));
    REQUIRE(got.clusters.size() == 2);
    bool triple = false;
    for (const auto& c : got.clusters) {
      if (c.multiplicity == 3) {
        triple = true;
        CHECK(std::abs(c.value - 0.3) < 1e-8);
      }
    }
    CHECK(triple);
  }
  SUBCASE("symmetric roots with vanishing middle terms stay apart") {
    // z^4 - 1e-4: four roots at radius 0.1.
    const Polynomial p{-1e-4, 0.0, 0.0, 0.0, 1.0};
    const PolynomialRoots got = polynomial_roots(p);
    CHECK(got.clusters.size() == 4);
    for (const Complex& x : got.roots) CHECK(std::abs(std::abs(x) - 0.1) < 1e-12);
  }
  SUBCASE("trailing zeros deflate exactly") {
    const Polynomial p{0.0, 0.0, -0.25, 1.0};
    const PolynomialRoots got = polynomial_roots(p);
    int zeros = 0;
    for (const Complex& x : got.roots) zeros += x == 0.0 ? 1 : 0;
    CHECK(zeros == 2);
  }
  SUBCASE("helpers") {
    const Polynomial p{1.0, 2.0, 3.0};
    CHECK(poly_derivative(p) == Polynomial{2.0, 6.0});
    CHECK(std::abs(poly_eval(p, 2.0) - 17.0) < 1e-15);
    CHECK(poly_multiply(p, Polynomial{0.0, 1.0}) == Polynomial{0.0, 1.0, 2.0, 3.0});
  }
}
