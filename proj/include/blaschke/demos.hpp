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


#ifndef BLASCHKE_DEMOS_HPP_
#define BLASCHKE_DEMOS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "blaschke/product.hpp"

namespace blaschke {

constexpr std::uint64_t kDefaultDemoSeed = 0xB1A5;

struct DemoProduct {
  std::string name;
  BlaschkeProduct product;
  std::optional<CompositionChain> chain;  // when the demo is built as one
};

const std::vector<std::string>& demo_names();

// Throws Error(kInvalidInput) for an unknown name. The seed only affects
// chain3; without one, BLASCHKE_SEED (if set) or kDefaultDemoSeed is used.
DemoProduct demo_product(const std::string& name,
                         std::optional<std::uint64_t> seed = std::nullopt);

// Seed from BLASCHKE_SEED (decimal, or hex with 0x), else the default.
// Throws Error(kInvalidInput) for an unparsable value.
std::uint64_t demo_seed();

// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);
Complex random_unimodular(std::mt19937_64& rng);
// Uniform angle, modulus uniform in [lo, hi].
Complex random_disk_point(std::mt19937_64& rng, double lo, double hi);

// gamma z (z - a)/(1 - conj(a) z) factors with |a| in [0.2, 0.8], outermost
// first.
CompositionChain random_quadratic_chain(std::mt19937_64& rng, int factors);

// Factors of the given degrees (outermost first), each vanishing at 0 with
// its other zeros at modulus in [0.2, 0.8].
CompositionChain random_chain(std::mt19937_64& rng, std::span<const int> degrees);

// The automorphism phi_a o (e^{i pi/4} z) o phi_a, of order 8.
DiskAutomorphism eighth_root_automorphism(Complex a);

}  // namespace blaschke

#endif  // BLASCHKE_DEMOS_HPP_
