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

#include "blaschke/poncelet.hpp"

#include <cmath>
#include <limits>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Unwrapped angle of the j-th circle preimage (j may reach 2 deg) at the
// curve offset t in [0, 2 pi).
double vertex_angle(const BlaschkeProduct& b, double psi0, int j, double t) {
  const int n = b.degree();
  const int wraps = j / n;
  const int base = j % n;
  return angle_for_level(b, psi0 + t + kTwoPi * base) + kTwoPi * wraps;
}

}  // namespace

ChordLine chord_line(double alpha, double beta) {
  ChordLine line;
  line.p = std::polar(1.0, alpha);
  line.q = std::polar(1.0, beta);
  line.normal = std::polar(1.0, 0.5 * (alpha + beta));
  line.offset = std::cos(0.5 * (beta - alpha));
  return line;
}

std::vector<Complex> EnvelopeCurve::points() const {
  std::vector<Complex> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.point);
  return out;
}

CircleSolutionSet polygon_vertices(const BlaschkeProduct& bhat, Complex lambda,
                                   const ToleranceConfig& tol) {
  return solve_on_circle(bhat, lambda, tol);
}

EnvelopeCurve envelope(const BlaschkeProduct& bhat, int skip, int samples,
                       const ToleranceConfig&) {
  const int n = bhat.degree();
  if (skip < 0 || skip > n / 2 - 1) {
    throw Error(ErrorCode::kInvalidInput, "skip must lie in 0 .. deg/2 - 1");
  }
  if (samples < 8) throw Error(ErrorCode::kInvalidInput, "envelope needs at least 8 samples");
  EnvelopeCurve curve;
  curve.skip = skip;
  curve.degree = n;
  const double psi0 = lifted_argument(bhat, 0.0);
  for (int s = 0; s < samples; ++s) {
    const double tau = kTwoPi * s / samples;
    // Chord k at offset t; consecutive k continue each other.
    const double scaled = n * tau;
    int k = static_cast<int>(std::floor(scaled / kTwoPi));
    k = std::clamp(k, 0, n - 1);
    const double t = scaled - kTwoPi * k;
    const double alpha = vertex_angle(bhat, psi0, k, t);
    const double beta = vertex_angle(bhat, psi0, k + skip + 1, t);
    const double da = 1.0 / lifted_argument_derivative(bhat, alpha);
    const double db = 1.0 / lifted_argument_derivative(bhat, beta);
    EnvelopeSample sample;
    sample.tau = tau;
    sample.lambda_angle = std::fmod(psi0 + t, kTwoPi);
    sample.chord = chord_line(alpha, beta);
    // The line Re(conj(u) z) = c and its t-derivative meet at the envelope.
    const double half = 0.5 * (beta - alpha);
    const double dmu = 0.5 * (da + db);
    const double dc = -std::sin(half) * 0.5 * (db - da);
    sample.point = sample.chord.normal * Complex(sample.chord.offset, dc / dmu);
    if (!std::isfinite(sample.point.real()) || !std::isfinite(sample.point.imag())) {
      throw Error(ErrorCode::kDegenerateEnvelope, "envelope point is undefined");
    }
    curve.samples.push_back(sample);
  }
  return curve;
}

std::vector<ChordLine> polygon_sides(const BlaschkeProduct& bhat, Complex lambda,
                                     int skip, const ToleranceConfig& tol) {
  const CircleSolutionSet v = polygon_vertices(bhat, lambda, tol);
  const int n = bhat.degree();
  std::vector<ChordLine> out;
  for (int k = 0; k < n; ++k) {
    const int j = k + skip + 1;
    const double beta = v.angles[j % n] + (j >= n ? kTwoPi : 0.0);
    out.push_back(chord_line(v.angles[k], beta));
  }
  return out;
}

double tangency_audit(const ConicFit& ellipse, const BlaschkeProduct& bhat,
                      std::span<const Complex> lambdas, int skip,
                      const ToleranceConfig& tol) {
  if (ellipse.kind != ConicKind::kEllipse) {
    throw Error(ErrorCode::kInvalidInput, "tangency audit needs an ellipse");
  }
  double worst = 0.0;
  for (const Complex& lambda : lambdas) {
    for (const ChordLine& side : polygon_sides(bhat, lambda, skip, tol)) {
      const double h = ellipse.support(std::arg(side.normal));
      worst = std::max(worst, std::abs(h - side.offset));
    }
  }
  return worst;
}

AxisCandidate axis_aligned_candidate(const BlaschkeProduct& bhat, Complex lambda,
                                     int skip, const ToleranceConfig& tol) {
  AxisCandidate out;
  out.sides = polygon_sides(bhat, lambda, skip, tol);
  double best_x = 1.0, best_y = 1.0;
  for (const ChordLine& side : out.sides) {
    const Complex u = side.normal;
    const double dx = 1.0 - std::abs(u.real());
    const double dy = 1.0 - std::abs(u.imag());
    if (dx < best_x) {
      best_x = dx;
      out.semi_x = std::abs(side.offset);
    }
    if (dy < best_y) {
      best_y = dy;
      out.semi_y = std::abs(side.offset);
    }
  }
  return out;
}

int poncelet_order(const BlaschkeProduct& bhat, int skip, Complex start,
                   const ToleranceConfig& tol) {
  const int n = bhat.degree();
  start /= std::abs(start);
  Complex p = start;
  for (int step = 1; step <= n; ++step) {
    const CircleSolutionSet v = solve_on_circle(bhat, bhat.evaluate(p, tol), tol);
    std::size_t idx = 0;
    for (std::size_t k = 1; k < v.points.size(); ++k) {
      if (std::abs(v.points[k] - p) < std::abs(v.points[idx] - p)) idx = k;
    }
    p = v.points[(idx + static_cast<std::size_t>(skip) + 1) % v.points.size()];
    if (std::abs(p - start) < 1e-8) return step;
  }
  return 0;
}

std::vector<Complex> ellipse_walk(const ConicFit& ellipse, Complex start, int steps) {
  if (ellipse.kind != ConicKind::kEllipse) {
    throw Error(ErrorCode::kInvalidInput, "ellipse walk needs an ellipse");
  }
  const Complex rot = std::polar(1.0, ellipse.angle);
  const double a = ellipse.semi_major, b = ellipse.semi_minor;
  std::vector<Complex> out{start / std::abs(start)};
  for (int s = 0; s < steps; ++s) {
    const Complex p = out.back();
    // In coordinates where the ellipse is the unit circle.
    const Complex local = (p - ellipse.center) * std::conj(rot);
    const Complex w(local.real() / a, local.imag() / b);
    const double r = std::abs(w);
    const double spread = std::acos(std::min(1.0, 1.0 / r));
    Complex next = p;
    double best_arc = 10.0;
    for (double sign : {1.0, -1.0}) {
      const Complex tw = std::polar(1.0, std::arg(w) + sign * spread);
      const Complex touch = ellipse.center + rot * Complex(a * tw.real(), b * tw.imag());
      const Complex q = chord_second_intersection(touch, p);
      double arc = std::arg(q / p);
      if (arc <= 0.0) arc += kTwoPi;
      if (arc < best_arc) {
        best_arc = arc;
        next = q;
      }
    }
    out.push_back(next);
  }
  return out;
}

PonceletPackage poncelet_package(const BlaschkeProduct& bhat, int samples,
                                 const ToleranceConfig& tol) {
  PonceletPackage out;
  out.degree = bhat.degree();
  for (int skip = 0; skip < out.degree / 2; ++skip) {
    PonceletCurve c;
    c.curve = envelope(bhat, skip, samples, tol);
    c.fit = fit_conic(c.curve.points(), tol);
    c.order = poncelet_order(bhat, skip, std::polar(1.0, 0.1), tol);
    out.curves.push_back(std::move(c));
  }
  return out;
}

std::vector<int> order_counts(const PonceletPackage& package) {
  std::vector<int> counts(static_cast<std::size_t>(package.degree) + 1, 0);
  for (const auto& c : package.curves) {
    if (c.order > 0 && c.order <= package.degree) counts[c.order] += 1;
  }
  return counts;
}

FocusMatch foci_vs_zeros(const ConicFit& fit, const BlaschkeProduct& b) {
  const auto& z = b.zeros();
  FocusMatch best;
  double best_cost = std::numeric_limits<double>::infinity();
  auto consider = [&](Complex u, Complex v) {
    for (int flip = 0; flip < 2; ++flip) {
      const Complex x = flip ? v : u, y = flip ? u : v;
      const double d0 = std::abs(fit.foci[0] - x), d1 = std::abs(fit.foci[1] - y);
      if (std::max(d0, d1) < best_cost) {
        best_cost = std::max(d0, d1);
        best.zeros = {x, y};
        best.distances = {d0, d1};
      }
    }
  };
  if (z.size() == 1) consider(z[0], z[0]);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) consider(z[i], z[j]);
  }
  return best;
}

}  // namespace blaschke
