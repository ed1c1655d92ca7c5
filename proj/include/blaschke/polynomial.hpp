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

#ifndef BLASCHKE_POLYNOMIAL_HPP_
#define BLASCHKE_POLYNOMIAL_HPP_

#include <complex>
#include <span>
#include <vector>

#include "blaschke/tolerance.hpp"

namespace blaschke {

using Complex = std::complex<double>;

// Coefficients in ascending order: c[0] + c[1] z + ... + c[d] z^d.
using Polynomial = std::vector<Complex>;

Polynomial poly_multiply(std::span<const Complex> p, std::span<const Complex> q);
Polynomial poly_derivative(std::span<const Complex> p);
Polynomial poly_from_roots(std::span<const Complex> roots);
Complex poly_eval(std::span<const Complex> p, Complex z);
// sum_k |c_k| |z|^k, the scale against which residuals are measured.
double poly_scale(std::span<const Complex> p, Complex z);

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

struct PolynomialRoots {
  std::vector<Complex> roots;          // one entry per root, with repetition
  std::vector<RootCluster> clusters;   // roots grouped by multiplicity
  std::vector<Complex> approximations; // unmerged iterates, same count as roots
  int iterations = 0;
  bool used_companion = false;
};

// Aberth-Ehrlich simultaneous iteration with a companion-matrix fallback.
// Exact zero roots (trailing zero coefficients) are deflated first. Nearby
// roots are merged into a multiple root when they are within cluster_tol of
// each other, or when the spread is consistent with the perturbation radius
// of a multiple root at their centroid; the centroid is then reported.
// Throws Error(kSolverFailure) if neither route reaches the residual bound
// |p(r)| <= root_tol * poly_scale(p, r).
PolynomialRoots polynomial_roots(std::span<const Complex> coeffs,
                                 const ToleranceConfig& tol = {});

}  // namespace blaschke

#endif  // BLASCHKE_POLYNOMIAL_HPP_
