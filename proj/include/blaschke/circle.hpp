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


#ifndef BLASCHKE_CIRCLE_HPP_
#define BLASCHKE_CIRCLE_HPP_

#include <vector>

#include "blaschke/product.hpp"

namespace blaschke {

struct CircleSolutionSet {
  Complex lambda;
  std::vector<double> angles;   // strictly increasing, in [0, 2 pi)
  std::vector<Complex> points;  // exp(i angles)
};

// Continuous lift psi of arg B(e^{it}) with psi(0) in [0, 2 pi).
double lifted_argument(const BlaschkeProduct& b, double t);
// psi'(t) = sum (1 - |a_j|^2) / |e^{it} - a_j|^2, always positive.
double lifted_argument_derivative(const BlaschkeProduct& b, double t);
// The t in [0, 2 pi) with psi(t) congruent to level modulo 2 pi deg B.
double angle_for_level(const BlaschkeProduct& b, double level);

// All deg B solutions of B(z) = lambda on the circle. Throws
// Error(kInvalidInput) unless |lambda| = 1, Error(kSolverFailure) if a
// solution fails the re-evaluation check.
CircleSolutionSet solve_on_circle(const BlaschkeProduct& b, Complex lambda,
                                  const ToleranceConfig& tol = {});

// The next solution of B(w) = B(z) counterclockwise from z.
Complex next_preimage(const BlaschkeProduct& b, Complex z,
                      const ToleranceConfig& tol = {});
// j-fold iterate of next_preimage, computed in one solve.
Complex preimage_power(const BlaschkeProduct& b, Complex z, int j,
                       const ToleranceConfig& tol = {});

struct GeneratorPowerCheck {
  bool holds = false;
  Complex a;           // from the innermost factor z phi_a
  int power = 0;       // 2^{n-1}
  double error = 0.0;  // sup over 64 samples
};

// For a chain of degree-2 factors whose innermost factor vanishes at 0 and
// a, compares the 2^{n-1} iterate of next_preimage with phi_a. Throws
// Error(kInvalidInput) for any other chain shape.
GeneratorPowerCheck verify_generator_power(const CompositionChain& chain,
                                           const ToleranceConfig& tol = {});

struct InvariantGroup {
  int degree = 0;
  int order = 0;  // first k with g^k = id on the samples, 0 if none up to deg
  bool cyclic = false;
  std::vector<double> identity_errors;  // sup |g^k(z) - z| for k = 1..deg
};

InvariantGroup invariant_group(const BlaschkeProduct& b,
                               const ToleranceConfig& tol = {});

// Second point where the line through z (on the circle) and a meets the
// circle.
Complex chord_second_intersection(Complex a, Complex z);

}  // namespace blaschke

#endif  // BLASCHKE_CIRCLE_HPP_
