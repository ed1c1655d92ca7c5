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

#include "blaschke/decompose.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "blaschke/circle.hpp"
#include "blaschke/critical.hpp"
#include "blaschke/error.hpp"
#include "blaschke/poncelet.hpp"
#include "blaschke/shiftop.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kVerifyTol = 1e-8;
constexpr int kMaxStarts = 8;

double sup_error(const BlaschkeProduct& b, const BlaschkeProduct& outer,
                 const BlaschkeProduct& inner) {
  return circle_sup_distance([&](Complex z) { return b.evaluate(z); },
                             [&](Complex z) { return outer.evaluate(inner.evaluate(z)); },
                             100);
}

// B0 = phi_c o B with c = B(0), so that B0(0) = 0; B = phi_c o B0.
struct Normalized {
  Complex c;
  BlaschkeProduct b0;
};

Normalized vanish_at_origin(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  const Complex c = b.evaluate(0.0, tol);
  if (std::abs(c) <= 1e-15) return {0.0, b};
  return {c, compose(DiskAutomorphism::involution(c), b, tol)};
}

BlaschkeProduct restore(const Normalized& n, const BlaschkeProduct& outer,
                        const ToleranceConfig& tol) {
  if (n.c == 0.0) return outer;
  return compose(DiskAutomorphism::involution(n.c), outer, tol);
}

// Outer factor from the inner one: zeros are the images of B's zeros,
// each fiber of k zeros collapsing to one.
std::optional<BlaschkeProduct> outer_from_inner(const BlaschkeProduct& b0,
                                                const BlaschkeProduct& inner,
                                                const ToleranceConfig& tol) {
  const int k = inner.degree();
  std::vector<Complex> images;
  for (const Complex& z : b0.zeros()) images.push_back(inner.evaluate(z, tol));
  std::vector<Complex> zeros;
  for (const RootCluster& c : cluster_points(images, 10.0 * tol.cluster_tol)) {
    if (c.multiplicity % k != 0) return std::nullopt;
    for (int j = 0; j < c.multiplicity / k; ++j) zeros.push_back(c.value);
  }
  for (const Complex& z : zeros) {
    if (!(std::abs(z) < 1.0)) return std::nullopt;
  }
  const Complex probe = std::polar(1.0, 0.7);
  const BlaschkeProduct unit(1.0, zeros);
  const Complex gamma = b0.evaluate(probe, tol) / unit.evaluate(inner.evaluate(probe, tol), tol);
  return rotate(unit, gamma / std::abs(gamma));
}

bool invariant_zero_set(const std::vector<Complex>& zeros, const DiskAutomorphism& phi,
                        double tol) {
  std::vector<bool> used(zeros.size(), false);
  for (const Complex& z : zeros) {
    const Complex w = phi(z);
    std::size_t best = zeros.size();
    double best_d = tol;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(zeros[j] - w);
      if (d <= best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == zeros.size()) return false;
    used[best] = true;
  }
  return true;
}

// Residuals psi_D(t_i) - psi_D(t_0) - 2 pi i on two orbits, with the
// Jacobian in the real coordinates of the free zeros d_j.
class OrbitSystem {
 public:
  OrbitSystem(int k, std::vector<double> orbit1, std::vector<double> orbit2)
      : k_(k), orbits_{std::move(orbit1), std::move(orbit2)} {}

  int size() const { return 2 * (k_ - 1); }

  Eigen::VectorXd residual(const std::vector<Complex>& d) const {
    Eigen::VectorXd f(size());
    int row = 0;
    for (const auto& orbit : orbits_) {
      const double base = lift(d, orbit[0]);
      for (int i = 1; i < k_; ++i) f(row++) = lift(d, orbit[i]) - base - kTwoPi * i;
    }
    return f;
  }

  Eigen::MatrixXd jacobian(const std::vector<Complex>& d) const {
    Eigen::MatrixXd jac(size(), size());
    int row = 0;
    for (const auto& orbit : orbits_) {
      for (int i = 1; i < k_; ++i) {
        for (int j = 0; j < k_ - 1; ++j) {
          const Complex gi = grad(d[j], orbit[i]);
          const Complex g0 = grad(d[j], orbit[0]);
          jac(row, 2 * j) = gi.real() - g0.real();
          jac(row, 2 * j + 1) = gi.imag() - g0.imag();
        }
        ++row;
      }
    }
    return jac;
  }

 private:
  double lift(const std::vector<Complex>& d, double t) const {
    const Complex e = std::polar(1.0, -t);
    double psi = k_ * t;
    for (const Complex& z : d) psi += 2.0 * std::arg(1.0 - z * e);
    return psi;
  }

  // (d/dx, d/dy) of 2 Arg(1 - d e^{-it}), packed as a complex number.
  static Complex grad(Complex d, double t) {
    const Complex e = std::polar(1.0, -t);
    const Complex u = e / (1.0 - d * e);
    return {-2.0 * u.imag(), -2.0 * u.real()};
  }

  int k_;
  std::array<std::vector<double>, 2> orbits_;
};

// Damped Newton; returns true on convergence.
bool solve_orbits(const OrbitSystem& sys, std::vector<Complex>& d) {
  Eigen::VectorXd f = sys.residual(d);
  double norm = f.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < 100; ++it) {
    if (norm < 1e-11) return true;
    const Eigen::MatrixXd jac = sys.jacobian(d);
    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-f);
    if (!step.allFinite()) return false;
    double damping = 1.0;
    bool accepted = false;
    for (int h = 0; h < 40; ++h, damping *= 0.5) {
      std::vector<Complex> trial = d;
      bool inside = true;
      for (std::size_t j = 0; j < d.size(); ++j) {
        trial[j] += damping * Complex(step(2 * j), step(2 * j + 1));
        inside = inside && std::abs(trial[j]) < 1.0 - 1e-12;
      }
      if (!inside) continue;
      const Eigen::VectorXd ft = sys.residual(trial);
      const double nt = ft.lpNorm<Eigen::Infinity>();
      if (nt < norm) {
        d = std::move(trial);
        f = ft;
        norm = nt;
        accepted = true;
        break;
      }
    }
    if (!accepted) return norm < 1e-11;
  }
  return norm < 1e-11;
}

void for_each_subset(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(int n, int r) {
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

bool is_power_of_two(int n) { return n >= 2 && (n & (n - 1)) == 0; }

std::vector<int> proper_divisors(int n) {
  std::vector<int> out;
  for (int k = 2; k < n; ++k) {
    if (n % k == 0) out.push_back(k);
  }
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::optional<Factorization> inner_of_degree(const BlaschkeProduct& b, int k,
                                             const ToleranceConfig& tol) {
  if (k == 2) {
    if (auto r = inner_degree2(b, tol)) return r->factors;
  }
  InnerFactorResult g = inner_factor_general(b, k, tol);
  return g.factors;
}

}  // namespace

const char* search_status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNotFound: return "not found";
    case SearchStatus::kSolverFailure: return "solver failure";
  }
  return "unknown";
}

std::optional<InnerDegree2> inner_degree2(const BlaschkeProduct& b,
                                          const ToleranceConfig& tol) {
  if (b.degree() % 2 != 0 || b.degree() < 2) return std::nullopt;
  const Normalized n = vanish_at_origin(b, tol);
  const std::vector<Complex>& zeros = n.b0.zeros();
  const int samples = 4 * b.degree();
  for (const RootCluster& cand : cluster_points(zeros, tol.cluster_tol)) {
    const Complex a = cand.value;
    const DiskAutomorphism phi = DiskAutomorphism::involution(a);
    if (!invariant_zero_set(zeros, phi, 10.0 * tol.cluster_tol)) continue;
    const double drift = circle_sup_distance(
        [&](Complex z) { return n.b0.evaluate(phi(z)); },
        [&](Complex z) { return n.b0.evaluate(z); }, samples);
    if (drift > tol.identity_tol) continue;
    const BlaschkeProduct inner(1.0, {0.0, a});
    const auto outer0 = outer_from_inner(n.b0, inner, tol);
    if (!outer0 || sup_error(n.b0, *outer0, inner) > kVerifyTol) continue;
    const BlaschkeProduct outer = restore(n, *outer0, tol);
    const double err = sup_error(b, outer, inner);
    if (err > kVerifyTol) continue;
    return InnerDegree2{{outer, inner, err}, a};
  }
  return std::nullopt;
}

InnerFactorResult inner_factor_general(const BlaschkeProduct& b, int k,
                                       const ToleranceConfig& tol) {
  const int n = b.degree();
  if (k <= 1 || k >= n || n % k != 0) {
    throw Error(ErrorCode::kInvalidInput, "inner degree must be a proper divisor");
  }
  const Normalized norm = vanish_at_origin(b, tol);
  const BlaschkeProduct& b0 = norm.b0;
  const int m = n / k;
  const double psi0 = lifted_argument(b0, 0.0);
  std::vector<double> orbit1, orbit2;
  for (int i = 0; i < k; ++i) {
    orbit1.push_back(i == 0 ? 0.0 : angle_for_level(b0, psi0 + kTwoPi * m * i));
    orbit2.push_back(angle_for_level(b0, psi0 + kPi + kTwoPi * m * i));
  }
  const OrbitSystem sys(k, orbit1, orbit2);

  // Starting guesses: a perturbed z^k, then subsets of the zeros of B0
  // (minus the one at the origin) ranked by residual.
  std::vector<std::vector<Complex>> starts;
  {
    std::vector<Complex> d;
    for (int j = 0; j < k - 1; ++j) d.push_back(std::polar(0.05, kTwoPi * (j + 0.3) / (k - 1)));
    starts.push_back(d);
  }
  std::vector<Complex> pool = b0.zeros();
  pool.erase(std::min_element(pool.begin(), pool.end(), [](Complex x, Complex y) {
    return std::abs(x) < std::abs(y);
  }));
  if (binomial(static_cast<int>(pool.size()), k - 1) <= 20000.0) {
    std::multimap<double, std::vector<Complex>> ranked;
    std::map<std::vector<std::pair<double, double>>, bool> seen;
    for_each_subset(static_cast<int>(pool.size()), k - 1, [&](const std::vector<int>& idx) {
      std::vector<Complex> d;
      std::vector<std::pair<double, double>> key;
      for (int i : idx) {
        d.push_back(pool[i]);
        key.emplace_back(pool[i].real(), pool[i].imag());
      }
      std::sort(key.begin(), key.end());
      if (!seen.emplace(key, true).second) return;
      ranked.emplace(sys.residual(d).lpNorm<Eigen::Infinity>(), d);
      if (ranked.size() > static_cast<std::size_t>(kMaxStarts)) ranked.erase(std::prev(ranked.end()));
    });
    for (const auto& [res, d] : ranked) starts.push_back(d);
  }
  if (starts.size() > static_cast<std::size_t>(kMaxStarts)) starts.resize(kMaxStarts);
  // Better-ranked subsets first; the z^k start is the fallback.
  std::rotate(starts.begin(), starts.begin() + 1, starts.end());

  InnerFactorResult out;
  bool converged_any = false;
  for (auto d : starts) {
    ++out.starts;
    if (!solve_orbits(sys, d)) continue;
    converged_any = true;
    std::vector<Complex> zeros{0.0};
    zeros.insert(zeros.end(), d.begin(), d.end());
    const BlaschkeProduct inner(1.0, zeros);
    const auto outer0 = outer_from_inner(b0, inner, tol);
    if (!outer0 || sup_error(b0, *outer0, inner) > kVerifyTol) continue;
    const BlaschkeProduct outer = restore(norm, *outer0, tol);
    const double err = sup_error(b, outer, inner);
    if (err > kVerifyTol) continue;
    out.status = SearchStatus::kFound;
    out.factors = Factorization{outer, inner, err};
    return out;
  }
  out.status = converged_any ? SearchStatus::kNotFound : SearchStatus::kSolverFailure;
  out.detail = converged_any ? "orbit equations solved but no start reproduces B"
                             : "orbit equations did not converge from any start";
  return out;
}

DecompositionReport chain_2n(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  DecompositionReport report;
  report.degree = b.degree();
  ShapeAttempt attempt;
  const int n = b.degree();
  for (int d = n; d > 1; d /= 2) attempt.degrees.push_back(2);
  if (!is_power_of_two(n)) {
    attempt.degrees = {n};
    attempt.detail = "degree is not a power of two";
    report.attempts.push_back(attempt);
    return report;
  }
  BlaschkeProduct current = b;
  std::vector<BlaschkeProduct> inners;
  int level = 0;
  while (current.degree() > 2) {
    std::optional<Factorization> f = inner_of_degree(current, 2, tol);
    if (!f) {
      attempt.detail = "no degree-2 inner factor at level " + std::to_string(level);
      report.attempts.push_back(attempt);
      return report;
    }
    inners.push_back(f->inner);
    current = f->outer;
    ++level;
  }
  std::vector<BlaschkeProduct> factors{current};
  factors.insert(factors.end(), inners.rbegin(), inners.rend());
  CompositionChain chain(std::move(factors));
  attempt.error = circle_sup_distance([&](Complex z) { return b.evaluate(z); },
                                      [&](Complex z) { return chain.evaluate(z); }, 100);
  if (attempt.error > kVerifyTol) {
    attempt.detail = "chain does not reproduce B";
  } else {
    attempt.status = SearchStatus::kFound;
    report.chains.push_back(chain);
    report.errors.push_back(attempt.error);
  }
  report.attempts.push_back(attempt);
  return report;
}

CompositionChain decompose_chain(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  BlaschkeProduct current = b;
  std::vector<BlaschkeProduct> inners;
  while (!is_prime(current.degree()) && current.degree() > 1) {
    std::optional<Factorization> found;
    for (int k : proper_divisors(current.degree())) {
      if (!is_prime(k)) continue;
      found = inner_of_degree(current, k, tol);
      if (found) break;
    }
    if (!found) break;
    inners.push_back(found->inner);
    current = found->outer;
  }
  std::vector<BlaschkeProduct> factors{current};
  factors.insert(factors.end(), inners.rbegin(), inners.rend());
  return CompositionChain(std::move(factors));
}

DecompositionReport decompose_report(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  DecompositionReport report;
  report.degree = b.degree();
  for (int k : proper_divisors(b.degree())) {
    ShapeAttempt attempt;
    attempt.degrees = {b.degree() / k, k};
    std::optional<Factorization> f;
    if (k == 2) {
      if (auto r = inner_degree2(b, tol)) f = r->factors;
    }
    if (!f) {
      InnerFactorResult g = inner_factor_general(b, k, tol);
      attempt.status = g.status;
      attempt.detail = g.detail;
      f = g.factors;
    }
    if (f) {
      attempt.status = SearchStatus::kFound;
      attempt.detail.clear();
      attempt.error = f->error;
      report.chains.push_back(CompositionChain({f->outer, f->inner}));
      report.errors.push_back(f->error);
    }
    report.attempts.push_back(attempt);
  }
  if (is_power_of_two(b.degree()) && b.degree() >= 8) {
    DecompositionReport full = chain_2n(b, tol);
    for (std::size_t i = 0; i < full.chains.size(); ++i) {
      report.chains.push_back(full.chains[i]);
      report.errors.push_back(full.errors[i]);
    }
    report.attempts.insert(report.attempts.end(), full.attempts.begin(), full.attempts.end());
  }
  return report;
}

EllipticDecomposableCheck elliptical_implies_decomposable_check(
    const BlaschkeProduct& b, const ToleranceConfig& tol) {
  EllipticDecomposableCheck out;
  if (std::abs(b.evaluate(0.0, tol)) <= 1e-15 && b.degree() >= 2) {
    out.elliptical = is_elliptical_range(shift_matrix(range_zeros(b)), 720, tol).elliptical;
  } else if (b.degree() >= 2) {
    const EnvelopeCurve k1 = envelope(b, 0, 720, tol);
    out.elliptical = fit_conic(k1.points(), tol).kind == ConicKind::kEllipse;
  }
  out.consistent = true;
  for (int k : proper_divisors(b.degree())) {
    out.divisors.push_back(k);
    SearchStatus status = SearchStatus::kNotFound;
    if (inner_of_degree(b, k, tol)) status = SearchStatus::kFound;
    out.outcomes.push_back(status);
    if (out.elliptical && status != SearchStatus::kFound) out.consistent = false;
  }
  return out;
}

}  // namespace blaschke
