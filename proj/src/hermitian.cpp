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

#include "blaschke/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

double off_norm2(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

}  // namespace

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || !h.allFinite()) {
    throw Error(ErrorCode::kEigensolverFailure, "matrix must be square and finite");
  }
  const Eigen::Index n = h.rows();
  Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);
  const double target = 1e-14 * scale;
  HermitianEigen out;
  for (; out.sweeps <= 100; ++out.sweeps) {
    if (std::sqrt(off_norm2(a)) <= target) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> beta = a(p, q);
        const double mag = std::abs(beta);
        if (mag <= 1e-300) continue;
        const std::complex<double> phase = beta / mag;  // e^{i phi}
        const double alpha = a(p, p).real();
        const double delta = a(q, q).real();
        const double zeta = (delta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> ep = std::conj(phase);  // e^{-i phi}
        // Columns: A J, with J_pp = c, J_pq = s, J_qp = -s e^{-i phi},
        // J_qq = c e^{-i phi}.
        for (Eigen::Index i = 0; i < n; ++i) {
          const auto ap = a(i, p), aq = a(i, q);
          a(i, p) = c * ap - s * ep * aq;
          a(i, q) = s * ap + c * ep * aq;
          const auto vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * ep * vq;
          v(i, q) = s * vp + c * ep * vq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const auto ap = a(p, j), aq = a(q, j);
          a(p, j) = c * ap - s * phase * aq;
          a(q, j) = s * ap + c * phase * aq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (out.sweeps > 100) {
    throw Error(ErrorCode::kEigensolverFailure, "Jacobi sweeps did not converge");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace blaschke
