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

#include "blaschke/circle.hpp"

#include <algorithm>
#include <cmath>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double raw_argument(const BlaschkeProduct& b, double t) {
  const Complex e = std::polar(1.0, -t);
  double psi = std::arg(b.gamma()) + b.degree() * t;
  for (const Complex& a : b.zeros()) psi += 2.0 * std::arg(1.0 - a * e);
  return psi;
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

// Solves psi(t) = target on [0, 2 pi]: Newton, falling back to bisection
// whenever a step would leave the bracket or fails to shrink fast enough.
double solve_lift(const BlaschkeProduct& b, double target, double guess,
                  double offset) {
  double lo = 0.0, hi = kTwoPi;
  double t = std::clamp(guess, lo, hi);
  double step_old = hi - lo;
  double step = step_old;
  for (int it = 0; it < 200; ++it) {
    const double f = raw_argument(b, t) + offset - target;
    if (f == 0.0) return t;
    if (f < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    if (hi - lo <= 4e-16 * kTwoPi) break;
    const double df = lifted_argument_derivative(b, t);
    double next = t - f / df;
    if (!(next > lo && next < hi) || std::abs(2.0 * f) > std::abs(step_old * df)) {
      next = 0.5 * (lo + hi);
    }
    step_old = step;
    step = next - t;
    if (std::abs(step) <= 1e-16 * kTwoPi) {
      t = next;
      break;
    }
    t = next;
  }
  return t;
}

}  // namespace

double angle_for_level(const BlaschkeProduct& b, double level) {
  const double raw0 = raw_argument(b, 0.0);
  const double psi0 = wrap_angle(raw0);
  const double span = kTwoPi * b.degree();
  double x = std::fmod(level - psi0, span);
  if (x < 0.0) x += span;
  if (x == 0.0) return 0.0;
  const double t = solve_lift(b, psi0 + x, x / b.degree(), psi0 - raw0);
  return t >= kTwoPi ? 0.0 : t;
}

double lifted_argument(const BlaschkeProduct& b, double t) {
  const double raw0 = raw_argument(b, 0.0);
  return raw_argument(b, t) - raw0 + wrap_angle(raw0);
}

double lifted_argument_derivative(const BlaschkeProduct& b, double t) {
  const Complex z = std::polar(1.0, t);
  double d = 0.0;
  for (const Complex& a : b.zeros()) d += (1.0 - std::norm(a)) / std::norm(z - a);
  return d;
}

CircleSolutionSet solve_on_circle(const BlaschkeProduct& b, Complex lambda,
                                  const ToleranceConfig& tol) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidInput, "lambda must lie on the unit circle");
  }
  CircleSolutionSet out;
  out.lambda = lambda / std::abs(lambda);
  const double psi0 = lifted_argument(b, 0.0);
  double base = std::arg(out.lambda);
  while (base < psi0) base += kTwoPi;
  while (base >= psi0 + kTwoPi) base -= kTwoPi;
  for (int k = 0; k < b.degree(); ++k) {
    const double t = angle_for_level(b, base + kTwoPi * k);
    out.angles.push_back(t);
  }
  for (std::size_t k = 1; k < out.angles.size(); ++k) {
    if (!(out.angles[k] > out.angles[k - 1])) {
      throw Error(ErrorCode::kSolverFailure, "circle solutions are not separated");
    }
  }
  for (double t : out.angles) {
    const Complex z = std::polar(1.0, t);
    if (std::abs(b.evaluate(z, tol) - out.lambda) > 1e-10) {
      throw Error(ErrorCode::kSolverFailure, "circle solution failed re-evaluation");
    }
    out.points.push_back(z);
  }
  return out;
}

Complex preimage_power(const BlaschkeProduct& b, Complex z, int j,
                       const ToleranceConfig&) {
  const double t = wrap_angle(std::arg(z));
  const int n = b.degree();
  j %= n;
  if (j < 0) j += n;
  if (j == 0) return z / std::abs(z);
  return std::polar(1.0, angle_for_level(b, lifted_argument(b, t) + kTwoPi * j));
}

Complex next_preimage(const BlaschkeProduct& b, Complex z, const ToleranceConfig& tol) {
  return preimage_power(b, z, 1, tol);
}

GeneratorPowerCheck verify_generator_power(const CompositionChain& chain,
                                           const ToleranceConfig& tol) {
  for (const auto& f : chain.factors()) {
    if (f.degree() != 2) {
      throw Error(ErrorCode::kInvalidInput, "chain factors must have degree 2");
    }
  }
  const auto& inner = chain.factors().back().zeros();
  GeneratorPowerCheck out;
  if (inner[0] == 0.0) {
    out.a = inner[1];
  } else if (inner[1] == 0.0) {
    out.a = inner[0];
  } else {
    throw Error(ErrorCode::kInvalidInput, "innermost factor must vanish at 0");
  }
  const BlaschkeProduct b = chain.expand(tol);
  const DiskAutomorphism phi = DiskAutomorphism::involution(out.a);
  const int n = static_cast<int>(chain.factors().size());
  out.power = 1 << (n - 1);
  std::vector<Complex> w(64);
  for (int s = 0; s < 64; ++s) w[s] = std::polar(1.0, kTwoPi * s / 64.0);
  std::vector<Complex> z = w;
  for (int k = 0; k < out.power; ++k) {
    for (auto& p : w) p = next_preimage(b, p, tol);
  }
  for (int s = 0; s < 64; ++s) out.error = std::max(out.error, std::abs(w[s] - phi(z[s])));
  out.holds = out.error <= tol.identity_tol;
  return out;
}

InvariantGroup invariant_group(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  InvariantGroup out;
  out.degree = b.degree();
  std::vector<Complex> start(64);
  for (int s = 0; s < 64; ++s) start[s] = std::polar(1.0, kTwoPi * (s + 0.5) / 64.0);
  std::vector<Complex> w = start;
  for (int k = 1; k <= out.degree; ++k) {
    double err = 0.0;
    for (int s = 0; s < 64; ++s) {
      w[s] = next_preimage(b, w[s], tol);
      err = std::max(err, std::abs(w[s] - start[s]));
    }
    out.identity_errors.push_back(err);
    if (out.order == 0 && err <= tol.identity_tol) out.order = k;
  }
  out.cyclic = out.order == out.degree;
  return out;
}

Complex chord_second_intersection(Complex a, Complex z) {
  const Complex d = a - z;
  const double s = -2.0 * std::real(std::conj(z) * d) / std::norm(d);
  const Complex p = z + s * d;
  return p / std::abs(p);
}

}  // namespace blaschke
