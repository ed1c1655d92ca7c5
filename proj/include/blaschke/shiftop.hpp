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


#ifndef BLASCHKE_SHIFTOP_HPP_
#define BLASCHKE_SHIFTOP_HPP_

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "blaschke/conic.hpp"
#include "blaschke/product.hpp"

namespace blaschke {

// Upper-triangular model of the compressed shift, zeros on the diagonal in
// the given order.
Eigen::MatrixXcd shift_matrix(std::span<const Complex> zeros);

// Zeros whose shift matrix has boundary equal to the first Blaschke curve
// of b: b's zeros with one zero at the origin removed when present.
std::vector<Complex> range_zeros(const BlaschkeProduct& b);

struct NumericalRangeSample {
  std::vector<double> angles;
  std::vector<double> support;  // h(theta) = top eigenvalue of Re(e^{-i theta} A)
  std::vector<Complex> points;  // <A v, v> for the top eigenvector v
};

// Support-function sweep over `samples` equispaced angles. Throws
// Error(kInvalidInput) for samples < 8, Error(kEigensolverFailure) if a
// boundary point misses its support line by more than 1e-10.
NumericalRangeSample numerical_range_boundary(const Eigen::MatrixXcd& a,
                                              int samples = 720);

struct KippenhahnForm {
  Eigen::MatrixXcd re;  // (A + A*) / 2
  Eigen::MatrixXcd im;  // (A - A*) / 2i

  // det(u Re A + v Im A + w I) by partial-pivot LU.
  Complex operator()(Complex u, Complex v, Complex w) const;
};

KippenhahnForm kippenhahn_form(const Eigen::MatrixXcd& a);
Complex kippenhahn_eval(const Eigen::MatrixXcd& a, Complex u, Complex v, Complex w);

struct RangeVerdict {
  NumericalRangeSample sample;
  ConicFit fit;
  double support_mismatch = 0.0;  // max |h - h_fit| when the fit is an ellipse
  bool elliptical = false;
};

RangeVerdict is_elliptical_range(const Eigen::MatrixXcd& a, int samples = 720,
                                 const ToleranceConfig& tol = {});

}  // namespace blaschke

#endif  // BLASCHKE_SHIFTOP_HPP_
