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

#include "blaschke/demos.hpp"

#include <cmath>
#include <cstdlib>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;

BlaschkeProduct quadratic(Complex gamma, Complex a) { return BlaschkeProduct(gamma, {0.0, a}); }

DemoProduct from_chain(std::string name, std::vector<BlaschkeProduct> factors) {
  CompositionChain chain(std::move(factors));
  BlaschkeProduct expanded = chain.expand();
  return {std::move(name), std::move(expanded), std::move(chain)};
}

DemoProduct elliptical8() {
  const DiskAutomorphism phi = eighth_root_automorphism(0.5);
  const DiskAutomorphism inv = phi.inverse();
  const Complex base = phi(0.0);
  const Complex alpha = std::pow(base, 8);
  const DiskAutomorphism outer = DiskAutomorphism::involution(alpha);
  std::vector<Complex> zeros;
  for (int k = 0; k < 8; ++k) zeros.push_back(inv(base * std::polar(1.0, kPi * k / 4.0)));
  // The zero at phi^{-1}(phi(0)) is the origin itself.
  zeros[0] = 0.0;
  const Complex probe = std::polar(1.0, 0.4);
  const Complex target = outer(std::pow(phi(probe), 8));
  const BlaschkeProduct unit(1.0, zeros);
  return {"elliptical8", rotate(unit, target / unit.evaluate(probe)), std::nullopt};
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{
      "power2", "power8", "elliptical8", "nonexample84", "deg6elliptic", "deg6nonelliptic",
      "chain3"};
  return names;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex random_unimodular(std::mt19937_64& rng) {
  return std::polar(1.0, 2.0 * kPi * uniform01(rng));
}

Complex random_disk_point(std::mt19937_64& rng, double lo, double hi) {
  const double r = lo + (hi - lo) * uniform01(rng);
  return std::polar(r, 2.0 * kPi * uniform01(rng));
}

CompositionChain random_quadratic_chain(std::mt19937_64& rng, int factors) {
  std::vector<BlaschkeProduct> out;
  for (int k = 0; k < factors; ++k) {
    const Complex gamma = random_unimodular(rng);
    out.push_back(quadratic(gamma, random_disk_point(rng, 0.2, 0.8)));
  }
  return CompositionChain(std::move(out));
}

CompositionChain random_chain(std::mt19937_64& rng, std::span<const int> degrees) {
  std::vector<BlaschkeProduct> out;
  for (int d : degrees) {
    const Complex gamma = random_unimodular(rng);
    std::vector<Complex> zeros{0.0};
    for (int j = 1; j < d; ++j) zeros.push_back(random_disk_point(rng, 0.2, 0.8));
    out.emplace_back(gamma, zeros);
  }
  return CompositionChain(std::move(out));
}

DiskAutomorphism eighth_root_automorphism(Complex a) {
  const DiskAutomorphism phi_a = DiskAutomorphism::involution(a);
  const DiskAutomorphism spin = DiskAutomorphism::rotation_by(std::polar(1.0, kPi / 4.0));
  return compose(phi_a, compose(spin, phi_a));
}

std::uint64_t demo_seed() {
  const char* env = std::getenv("BLASCHKE_SEED");
  if (env == nullptr || *env == '\0') return kDefaultDemoSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidInput, "BLASCHKE_SEED is not an unsigned integer");
  }
}

DemoProduct demo_product(const std::string& name, std::optional<std::uint64_t> seed) {
  if (name == "power2") return {name, BlaschkeProduct::power(2), std::nullopt};
  if (name == "power8") {
    return from_chain(name, {BlaschkeProduct::power(2), BlaschkeProduct::power(2),
                             BlaschkeProduct::power(2)});
  }
  if (name == "elliptical8") return elliptical8();
  if (name == "nonexample84") {
    const double a = std::pow(0.84, 4);
    return from_chain(name, {quadratic(1.0, a), BlaschkeProduct::power(2),
                             BlaschkeProduct::power(2)});
  }
  if (name == "deg6elliptic") {
    const double a = 0.5;
    return from_chain(name, {BlaschkeProduct(1.0, {0.0, a, a}), BlaschkeProduct::power(2)});
  }
  if (name == "deg6nonelliptic") {
    return from_chain(name, {quadratic(1.0, 0.5), BlaschkeProduct::power(3)});
  }
  if (name == "chain3") {
    std::mt19937_64 rng(seed.value_or(demo_seed()));
    std::vector<BlaschkeProduct> factors = random_quadratic_chain(rng, 3).factors();
    return from_chain(name, std::move(factors));
  }
  throw Error(ErrorCode::kInvalidInput, "unknown demo '" + name + "'");
}

}  // namespace blaschke
