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


#ifndef BLASCHKE_TESTS_SUPPORT_HPP_
#define BLASCHKE_TESTS_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "blaschke/demos.hpp"
#include "blaschke/product.hpp"

namespace blaschke::testing {

constexpr double kPi = 3.14159265358979323846;

inline BlaschkeProduct random_product(std::mt19937_64& rng, int degree, double max_modulus = 0.9,
                                      bool zero_at_origin = false) {
  std::vector<Complex> zeros;
  for (int k = 0; k < degree; ++k) {
    zeros.push_back(zero_at_origin && k == 0 ? Complex(0.0)
                                             : random_disk_point(rng, 0.0, max_modulus));
  }
  return BlaschkeProduct(random_unimodular(rng), zeros);
}

// Straight from the definition, no shared code with the library.
inline Complex naive_evaluate(const BlaschkeProduct& b, Complex z) {
  Complex w = b.gamma();
  for (const Complex& a : b.zeros()) w *= (z - a) / (1.0 - std::conj(a) * z);
  return w;
}

inline Complex central_difference(const BlaschkeProduct& b, Complex z, double h) {
  return (naive_evaluate(b, z + h) - naive_evaluate(b, z - h)) / (2.0 * h);
}

// All t in [0, 2 pi) with B(e^{it}) = lambda, from sign changes of
// Im(conj(lambda) B) where Re > 0 on a fine grid, refined by bisection.
inline std::vector<double> brute_circle_solutions(const BlaschkeProduct& b, Complex lambda,
                                                  int grid = 20000) {
  auto f = [&](double t) {
    return std::conj(lambda) * naive_evaluate(b, std::polar(1.0, t));
  };
  std::vector<double> out;
  for (int k = 0; k < grid; ++k) {
    double lo = 2.0 * kPi * k / grid, hi = 2.0 * kPi * (k + 1) / grid;
    const Complex a = f(lo), c = f(hi);
    if (a.real() <= 0.0 || c.real() <= 0.0) continue;
    if (a.imag() == 0.0) {
      out.push_back(lo);
      continue;
    }
    if ((a.imag() < 0.0) == (c.imag() < 0.0)) continue;
    const bool rising = a.imag() < 0.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((f(mid).imag() < 0.0) == rising) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

// Winding number of a closed sampled path around p.
inline int winding_number(const std::vector<Complex>& path, Complex p) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    total += std::arg((path[k + 1] - p) / (path[k] - p));
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace blaschke::testing

#endif  // BLASCHKE_TESTS_SUPPORT_HPP_
