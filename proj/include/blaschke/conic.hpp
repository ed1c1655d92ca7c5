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


#ifndef BLASCHKE_CONIC_HPP_
#define BLASCHKE_CONIC_HPP_

#include <array>
#include <span>

#include "blaschke/tolerance.hpp"
#include "blaschke/product.hpp"

namespace blaschke {

enum class ConicKind { kEllipse, kPoint, kDegenerate, kNonConic };

const char* conic_kind_name(ConicKind kind);

// A x^2 + B xy + C y^2 + D x + E y + F = 0 with unit coefficient norm.
struct ConicFit {
  std::array<double, 6> coeffs{};
  ConicKind kind = ConicKind::kDegenerate;
  Complex center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double angle = 0.0;  // direction of the major axis
  std::array<Complex, 2> foci{};
  double max_residual = 0.0;  // max |Q| / |grad Q| over the fitted points
  double diameter = 0.0;      // of the point sample

  double evaluate(Complex p) const;
  // First-order distance |Q(p)| / |grad Q(p)|.
  double algebraic_distance(Complex p) const;
  // max_u <u, p> over the ellipse for u = e^{i theta}; ellipses only.
  double support(double theta) const;
  // max | |p - f1| + |p - f2| - 2 semi_major | over points.
  double focal_identity_error(std::span<const Complex> points) const;

  static ConicFit from_ellipse(Complex center, double semi_major,
                               double semi_minor, double angle);
  static ConicFit from_circle(Complex center, double radius) {
    return from_ellipse(center, radius, radius, 0.0);
  }
};

// Algebraic least squares on Hartley-normalized monomials (smallest right
// singular vector). Samples with diameter below 1e-6 are a point; a
// residual above conic_residual_tol classifies as non-conic. Throws
// Error(kInvalidInput) with fewer than 6 points.
ConicFit fit_conic(std::span<const Complex> points,
                   const ToleranceConfig& tol = {});

}  // namespace blaschke

#endif  // BLASCHKE_CONIC_HPP_
