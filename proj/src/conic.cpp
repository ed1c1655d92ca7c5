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

#include "blaschke/conic.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

void normalize_coeffs(std::array<double, 6>& c) {
  double norm = 0.0;
  for (double v : c) norm += v * v;
  norm = std::sqrt(norm);
  double sign = (c[0] + c[2] < 0.0) ? -1.0 : 1.0;
  for (double& v : c) v *= sign / norm;
}

// Center, axes and foci from the coefficients; sets kind to ellipse or
// degenerate.
void classify_quadric(ConicFit& fit) {
  const auto& [a, b, c, d, e, f] = fit.coeffs;
  const double disc = b * b - 4.0 * a * c;
  fit.kind = ConicKind::kDegenerate;
  if (!(disc < 0.0)) return;
  Eigen::Matrix2d m;
  m << 2.0 * a, b, b, 2.0 * c;
  const Eigen::Vector2d ctr = m.partialPivLu().solve(Eigen::Vector2d(-d, -e));
  fit.center = Complex(ctr(0), ctr(1));
  const double f0 = fit.evaluate(fit.center);
  Eigen::Matrix2d q;
  q << a, 0.5 * b, 0.5 * b, c;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q);
  const double l1 = es.eigenvalues()(0), l2 = es.eigenvalues()(1);
  if (!(l1 > 0.0) || !(f0 < 0.0)) return;
  fit.semi_major = std::sqrt(-f0 / l1);
  fit.semi_minor = std::sqrt(-f0 / l2);
  const Eigen::Vector2d dir = es.eigenvectors().col(0);
  fit.angle = std::atan2(dir(1), dir(0));
  const double lin = std::sqrt(
      std::max(0.0, fit.semi_major * fit.semi_major - fit.semi_minor * fit.semi_minor));
  const Complex offset = std::polar(lin, fit.angle);
  fit.foci = {fit.center + offset, fit.center - offset};
  fit.kind = ConicKind::kEllipse;
}

}  // namespace

const char* conic_kind_name(ConicKind kind) {
  switch (kind) {
    case ConicKind::kEllipse: return "ellipse";
    case ConicKind::kPoint: return "point";
    case ConicKind::kDegenerate: return "degenerate";
    case ConicKind::kNonConic: return "non-conic";
  }
  return "unknown";
}

double ConicFit::evaluate(Complex p) const {
  const double x = p.real(), y = p.imag();
  return coeffs[0] * x * x + coeffs[1] * x * y + coeffs[2] * y * y +
         coeffs[3] * x + coeffs[4] * y + coeffs[5];
}

double ConicFit::algebraic_distance(Complex p) const {
  const double x = p.real(), y = p.imag();
  const double gx = 2.0 * coeffs[0] * x + coeffs[1] * y + coeffs[3];
  const double gy = coeffs[1] * x + 2.0 * coeffs[2] * y + coeffs[4];
  const double g = std::hypot(gx, gy);
  const double q = std::abs(evaluate(p));
  return g > 0.0 ? q / g : q;
}

double ConicFit::support(double theta) const {
  const Complex u = std::polar(1.0, theta);
  const double along = std::cos(theta - angle);
  const double across = std::sin(theta - angle);
  return std::real(std::conj(u) * center) +
         std::sqrt(semi_major * semi_major * along * along +
                   semi_minor * semi_minor * across * across);
}

double ConicFit::focal_identity_error(std::span<const Complex> points) const {
  double worst = 0.0;
  for (const Complex& p : points) {
    const double s = std::abs(p - foci[0]) + std::abs(p - foci[1]);
    worst = std::max(worst, std::abs(s - 2.0 * semi_major));
  }
  return worst;
}

ConicFit ConicFit::from_ellipse(Complex center, double semi_major,
                                double semi_minor, double angle) {
  if (!(semi_major >= semi_minor) || !(semi_minor > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "ellipse axes must satisfy a >= b > 0");
  }
  const double cs = std::cos(angle), sn = std::sin(angle);
  const double ia = 1.0 / (semi_major * semi_major);
  const double ib = 1.0 / (semi_minor * semi_minor);
  const double a = cs * cs * ia + sn * sn * ib;
  const double b = 2.0 * cs * sn * (ia - ib);
  const double c = sn * sn * ia + cs * cs * ib;
  const double cx = center.real(), cy = center.imag();
  ConicFit fit;
  fit.coeffs = {a, b, c, -2.0 * a * cx - b * cy, -b * cx - 2.0 * c * cy,
                a * cx * cx + b * cx * cy + c * cy * cy - 1.0};
  normalize_coeffs(fit.coeffs);
  classify_quadric(fit);
  fit.diameter = 2.0 * semi_major;
  return fit;
}

ConicFit fit_conic(std::span<const Complex> points, const ToleranceConfig& tol) {
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  if (n < 6) throw Error(ErrorCode::kInvalidInput, "conic fit needs at least 6 points");
  ConicFit fit;
  Complex mean = 0.0;
  for (const Complex& p : points) mean += p;
  mean /= static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      fit.diameter = std::max(fit.diameter, std::abs(points[i] - points[j]));
    }
  }
  if (fit.diameter < 1e-6) {
    fit.kind = ConicKind::kPoint;
    fit.center = mean;
    fit.foci = {mean, mean};
    return fit;
  }
  double rms = 0.0;
  for (const Complex& p : points) rms += std::norm(p - mean);
  const double s = std::sqrt(2.0) / std::sqrt(rms / static_cast<double>(n));
  Eigen::MatrixXd design(n, 6);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = (points[i].real() - mean.real()) * s;
    const double y = (points[i].imag() - mean.imag()) * s;
    design.row(i) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeFullV);
  const Eigen::VectorXd w = svd.matrixV().col(5);
  // Undo the normalization x' = s (x - mx), y' = s (y - my).
  const double mx = mean.real(), my = mean.imag(), s2 = s * s;
  const double a = w(0) * s2, b = w(1) * s2, c = w(2) * s2;
  const double d = -2.0 * a * mx - b * my + w(3) * s;
  const double e = -b * mx - 2.0 * c * my + w(4) * s;
  const double f = a * mx * mx + b * mx * my + c * my * my - w(3) * s * mx -
                   w(4) * s * my + w(5);
  fit.coeffs = {a, b, c, d, e, f};
  normalize_coeffs(fit.coeffs);
  for (const Complex& p : points) {
    fit.max_residual = std::max(fit.max_residual, fit.algebraic_distance(p));
  }
  if (fit.max_residual > tol.conic_residual_tol) {
    fit.kind = ConicKind::kNonConic;
    return fit;
  }
  classify_quadric(fit);
  return fit;
}

}  // namespace blaschke
