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

#include "blaschke/shiftop.hpp"

#include <cmath>
#include <limits>

#include "blaschke/error.hpp"
#include "blaschke/hermitian.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Eigen::MatrixXcd shift_matrix(std::span<const Complex> zeros) {
  const Eigen::Index n = static_cast<Eigen::Index>(zeros.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  std::vector<double> defect(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    defect[i] = std::sqrt(1.0 - std::norm(zeros[i]));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = zeros[i];
    Complex chain = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = chain * defect[i] * defect[j];
      chain *= -std::conj(zeros[j]);
    }
  }
  return a;
}

std::vector<Complex> range_zeros(const BlaschkeProduct& b) {
  std::vector<Complex> zeros = b.zeros();
  for (auto it = zeros.begin(); it != zeros.end(); ++it) {
    if (*it == 0.0) {
      zeros.erase(it);
      break;
    }
  }
  return zeros;
}

NumericalRangeSample numerical_range_boundary(const Eigen::MatrixXcd& a, int samples) {
  if (samples < 8) {
    throw Error(ErrorCode::kInvalidInput, "numerical range needs at least 8 angles");
  }
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw Error(ErrorCode::kInvalidInput, "matrix must be square and nonempty");
  }
  NumericalRangeSample out;
  const Eigen::MatrixXcd adj = a.adjoint();
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * kPi * k / samples;
    const Complex rot = std::polar(1.0, -theta);
    const Eigen::MatrixXcd h = 0.5 * (rot * a + std::conj(rot) * adj);
    const HermitianEigen eig = hermitian_eigen(h);
    const Eigen::Index top = eig.values.size() - 1;
    const Eigen::VectorXcd v = eig.vectors.col(top).normalized();
    const Complex x = v.dot(a * v);
    const double hval = eig.values(top);
    if (std::abs(std::real(rot * x) - hval) > 1e-10) {
      throw Error(ErrorCode::kEigensolverFailure, "boundary point misses its support line");
    }
    out.angles.push_back(theta);
    out.support.push_back(hval);
    out.points.push_back(x);
  }
  return out;
}

Complex KippenhahnForm::operator()(Complex u, Complex v, Complex w) const {
  const Eigen::Index n = re.rows();
  const Eigen::MatrixXcd m = u * re + v * im + w * Eigen::MatrixXcd::Identity(n, n);
  return m.partialPivLu().determinant();
}

KippenhahnForm kippenhahn_form(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd adj = a.adjoint();
  return {0.5 * (a + adj), (a - adj) / Complex(0.0, 2.0)};
}

Complex kippenhahn_eval(const Eigen::MatrixXcd& a, Complex u, Complex v, Complex w) {
  return kippenhahn_form(a)(u, v, w);
}

RangeVerdict is_elliptical_range(const Eigen::MatrixXcd& a, int samples,
                                 const ToleranceConfig& tol) {
  RangeVerdict out;
  out.sample = numerical_range_boundary(a, samples);
  out.fit = fit_conic(out.sample.points, tol);
  if (out.fit.kind == ConicKind::kEllipse) {
    for (std::size_t k = 0; k < out.sample.angles.size(); ++k) {
      out.support_mismatch =
          std::max(out.support_mismatch,
                   std::abs(out.fit.support(out.sample.angles[k]) - out.sample.support[k]));
    }
    out.elliptical = out.fit.max_residual < tol.conic_residual_tol &&
                     out.support_mismatch < 1e-6;
  } else {
    out.support_mismatch = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace blaschke
