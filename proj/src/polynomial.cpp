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

#include "blaschke/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAberthIterations = 500;
// Backward error assumed for roots of polynomials whose coefficients were
// themselves assembled in floating point.
constexpr double kPerturbationLevel = 1e-11;
constexpr double kMaxClusterSpread = 0.05;

void eval_with_derivative(std::span<const Complex> p, Complex z, Complex& value,
                          Complex& deriv) {
  value = p.back();
  deriv = 0.0;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + p[k];
  }
}

// Coefficients of p(c + h) in powers of h.
Polynomial taylor_shift(std::span<const Complex> p, Complex c) {
  Polynomial q(p.begin(), p.end());
  const std::size_t d = q.size();
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (std::size_t k = d - 1; k-- > i;) q[k] += c * q[k + 1];
  }
  return q;
}

double fujiwara_bound(std::span<const Complex> p) {
  const std::size_t d = p.size() - 1;
  const double lead = std::abs(p[d]);
  double bound = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    double term = std::abs(p[d - k]) / lead;
    if (k == d) term *= 0.5;
    bound = std::max(bound, std::pow(term, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

bool residual_ok(std::span<const Complex> p, Complex z, double tol) {
  return std::abs(poly_eval(p, z)) <= tol * poly_scale(p, z);
}

// Returns true when all roots converged.
bool aberth(std::span<const Complex> p, std::vector<Complex>& z, int& iterations) {
  const std::size_t d = p.size() - 1;
  const double radius = std::max(1.0, fujiwara_bound(p));
  z.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(radius, 2.0 * kPi * k / d + 0.4);
  }
  std::vector<bool> done(d, false);
  for (iterations = 0; iterations < kMaxAberthIterations; ++iterations) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      Complex value, deriv;
      eval_with_derivative(p, z[i], value, deriv);
      if (std::abs(value) <= 4.0 * kEps * poly_scale(p, z[i])) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = value / deriv;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      if (std::abs(step) <= 4.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

std::vector<Complex> companion_roots(std::span<const Complex> p) {
  const Eigen::Index d = static_cast<Eigen::Index>(p.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) m(i, d - 1) = -p[i] / p[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kSolverFailure, "companion eigensolver failed");
  }
  std::vector<Complex> roots(solver.eigenvalues().begin(),
                             solver.eigenvalues().end());
  // A few Newton steps to pull eigenvalues onto the polynomial.
  for (auto& r : roots) {
    for (int it = 0; it < 4; ++it) {
      Complex value, deriv;
      eval_with_derivative(p, r, value, deriv);
      if (deriv == 0.0) break;
      const Complex next = r - value / deriv;
      if (std::abs(poly_eval(p, next)) >= std::abs(value)) break;
      r = next;
    }
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> p,
                                       const std::vector<Complex>& roots,
                                       const ToleranceConfig& tol) {
  std::vector<RootCluster> clusters;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (!used[j]) order.push_back(j);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(roots[a] - roots[i]) < std::abs(roots[b] - roots[i]);
    });
    std::size_t best = 1;
    Complex best_center = roots[i];
    for (std::size_t m = order.size(); m >= 2; --m) {
      Complex center = 0.0;
      for (std::size_t k = 0; k < m; ++k) center += roots[order[k]];
      center /= static_cast<double>(m);
      double spread = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        spread = std::max(spread, std::abs(roots[order[k]] - center));
      }
      // The next root must sit well outside the candidate cluster.
      if (m < order.size() &&
          std::abs(roots[order[m]] - center) <= 3.0 * spread) {
        continue;
      }
      bool accept = spread <= tol.cluster_tol;
      // A perturbed multiple root splits into a small, nearly regular ring.
      double nearest = spread;
      for (std::size_t k = 0; k < m; ++k) {
        nearest = std::min(nearest, std::abs(roots[order[k]] - center));
      }
      if (!accept && spread <= kMaxClusterSpread && nearest >= 0.5 * spread) {
        const Polynomial shifted = taylor_shift(p, center);
        const double lead = std::abs(shifted[m]);
        double tail = 0.0;
        for (std::size_t k = m; k < shifted.size(); ++k) tail += std::abs(shifted[k]);
        // A vanishing leading term means this is not an m-fold root at all.
        if (lead > 1e-6 * tail) {
          const double radius = std::pow(
              kPerturbationLevel * poly_scale(p, center) / lead, 1.0 / m);
          accept = spread <= 2.0 * radius;
        }
      }
      if (accept) {
        best = m;
        best_center = center;
        break;
      }
    }
    if (best >= 2) {
      // Newton on the (m-1)-th derivative, which has a simple root here.
      Polynomial dm(p.begin(), p.end());
      for (std::size_t k = 0; k + 1 < best; ++k) dm = poly_derivative(dm);
      Complex c = best_center;
      double spread = 0.0;
      for (std::size_t k = 0; k < best; ++k) {
        spread = std::max(spread, std::abs(roots[order[k]] - best_center));
      }
      for (int it = 0; it < 8 && dm.size() > 1; ++it) {
        Complex value, deriv;
        eval_with_derivative(dm, c, value, deriv);
        if (deriv == 0.0) break;
        const Complex next = c - value / deriv;
        if (std::abs(poly_eval(dm, next)) >= std::abs(value) ||
            std::abs(next - best_center) > 2.0 * spread + tol.cluster_tol) {
          break;
        }
        c = next;
      }
      best_center = c;
    }
    for (std::size_t k = 0; k < best; ++k) used[order[k]] = true;
    clusters.push_back({best_center, static_cast<int>(best)});
  }
  return clusters;
}

}  // namespace

Polynomial poly_multiply(std::span<const Complex> p, std::span<const Complex> q) {
  if (p.empty() || q.empty()) return {};
  Polynomial r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

Polynomial poly_derivative(std::span<const Complex> p) {
  if (p.size() <= 1) return {0.0};
  Polynomial r(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) {
    r[k - 1] = static_cast<double>(k) * p[k];
  }
  return r;
}

Polynomial poly_from_roots(std::span<const Complex> roots) {
  Polynomial r{1.0};
  for (const Complex& a : roots) {
    const Complex factor[2] = {-a, 1.0};
    r = poly_multiply(r, factor);
  }
  return r;
}

Complex poly_eval(std::span<const Complex> p, Complex z) {
  Complex value = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) value = value * z + p[k];
  return value;
}

double poly_scale(std::span<const Complex> p, Complex z) {
  const double r = std::abs(z);
  double scale = 0.0;
  double power = 1.0;
  for (const Complex& c : p) {
    scale += std::abs(c) * power;
    power *= r;
  }
  return scale;
}

PolynomialRoots polynomial_roots(std::span<const Complex> coeffs,
                                 const ToleranceConfig& tol) {
  Polynomial p(coeffs.begin(), coeffs.end());
  double largest = 0.0;
  for (const Complex& c : p) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) {
    throw Error(ErrorCode::kInvalidInput, "zero polynomial has no roots");
  }
  while (p.size() > 1 && std::abs(p.back()) <= 1e-16 * largest) p.pop_back();
  if (p.size() > 63) {
    throw Error(ErrorCode::kInvalidInput, "polynomial degree above 62");
  }

  PolynomialRoots result;
  std::size_t zero_roots = 0;
  while (zero_roots + 1 < p.size() && p[zero_roots] == 0.0) ++zero_roots;
  Polynomial reduced(p.begin() + static_cast<std::ptrdiff_t>(zero_roots), p.end());

  std::vector<Complex> roots;
  if (reduced.size() > 1) {
    const bool converged = aberth(reduced, roots, result.iterations);
    bool ok = converged;
    for (const Complex& r : roots) ok = ok && residual_ok(reduced, r, tol.root_tol);
    if (!ok) {
      roots = companion_roots(reduced);
      result.used_companion = true;
      for (const Complex& r : roots) {
        if (!residual_ok(reduced, r, tol.root_tol)) {
          throw Error(ErrorCode::kSolverFailure,
                      "polynomial root finder did not converge");
        }
      }
    }
  }

  result.clusters = cluster_roots(reduced, roots, tol);
  result.approximations = roots;
  result.approximations.insert(result.approximations.end(), zero_roots, 0.0);
  if (zero_roots > 0) {
    result.clusters.push_back({0.0, static_cast<int>(zero_roots)});
  }
  for (const RootCluster& c : result.clusters) {
    for (int k = 0; k < c.multiplicity; ++k) result.roots.push_back(c.value);
  }
  return result;
}

}  // namespace blaschke
