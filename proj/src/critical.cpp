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

#include "blaschke/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(std::real((p - a) * std::conj(d)) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// phi_a(z)^p as a product: zeros a (p times), constant (-1)^p.
BlaschkeProduct involution_power(Complex a, int p) {
  return BlaschkeProduct(p % 2 == 0 ? 1.0 : -1.0,
                         std::vector<Complex>(static_cast<std::size_t>(p), a));
}

// Log-derivative of the critical numerator, evaluated through the partial
// fraction sum so that no monomial coefficients are involved.
Complex numerator_log_derivative(const std::vector<RootCluster>& zeros, Complex z) {
  Complex l = 0.0, dl = 0.0, poles = 0.0;
  for (const RootCluster& c : zeros) {
    const Complex a = c.value;
    const double w = c.multiplicity * (1.0 - std::norm(a));
    const Complex q = (z - a) * (1.0 - std::conj(a) * z);
    const Complex dq = 1.0 - 2.0 * std::conj(a) * z + std::norm(a);
    l += w / q;
    dl -= w * dq / (q * q);
    poles += dq / q;
  }
  return dl / l + poles;
}

// Aberth sweeps on the critical numerator for simple roots.
void polish_roots(const std::vector<RootCluster>& zeros, std::vector<Complex>& roots) {
  const std::size_t d = roots.size();
  std::vector<bool> done(d, false);
  for (int it = 0; it < 100; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const Complex g = numerator_log_derivative(zeros, roots[i]);
      if (!std::isfinite(g.real()) || !std::isfinite(g.imag()) || g == 0.0) {
        done[i] = true;
        continue;
      }
      Complex rep = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) rep += 1.0 / (roots[i] - roots[j]);
      }
      const Complex ratio = 1.0 / g;
      const Complex step = ratio / (1.0 - ratio * rep);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        done[i] = true;
        continue;
      }
      roots[i] -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(roots[i]))) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
}

}  // namespace

Polynomial derivative_numerator(const BlaschkeProduct& b) {
  Polynomial p{1.0}, q{1.0};
  for (const Complex& a : b.zeros()) {
    const Complex pf[2] = {-a, 1.0};
    const Complex qf[2] = {1.0, -std::conj(a)};
    p = poly_multiply(p, pf);
    q = poly_multiply(q, qf);
  }
  const Polynomial dp = poly_derivative(p);
  const Polynomial dq = poly_derivative(q);
  const Polynomial left = poly_multiply(dp, q);
  const Polynomial right = poly_multiply(p, dq);
  Polynomial out(std::max(left.size(), right.size()), 0.0);
  for (std::size_t k = 0; k < left.size(); ++k) out[k] += left[k];
  for (std::size_t k = 0; k < right.size(); ++k) out[k] -= right[k];
  while (out.size() > 1 && out.back() == 0.0) out.pop_back();
  return out;
}

std::vector<RootCluster> cluster_points(std::span<const Complex> points,
                                        double tol) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(points[i] - points[j]) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> out;
  std::vector<long> slot(n, -1);
  std::vector<Complex> sums;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.push_back({0.0, 0});
      sums.push_back(0.0);
    }
    out[slot[r]].multiplicity += 1;
    sums[slot[r]] += points[i];
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].value = sums[k] / static_cast<double>(out[k].multiplicity);
  }
  return out;
}

CriticalData critical_data(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  CriticalData data;
  const std::vector<RootCluster> zeros = cluster_points(b.zeros(), tol.root_tol);
  for (const RootCluster& z : zeros) {
    for (int k = 1; k < z.multiplicity; ++k) data.points.push_back(z.value);
  }
  if (zeros.size() > 1) {
    // sum_j m_j (1 - |a_j|^2) prod_{l != j} (z - a_l)(1 - conj(a_l) z)
    Polynomial r;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      const double weight =
          zeros[j].multiplicity * (1.0 - std::norm(zeros[j].value));
      Polynomial term{Complex(weight)};
      for (std::size_t l = 0; l < zeros.size(); ++l) {
        if (l == j) continue;
        const Complex a = zeros[l].value;
        const Complex f[3] = {-a, 1.0 + std::norm(a), -std::conj(a)};
        term = poly_multiply(term, f);
      }
      if (r.empty()) r.assign(term.size(), 0.0);
      for (std::size_t k = 0; k < term.size(); ++k) r[k] += term[k];
    }
    const PolynomialRoots found = polynomial_roots(r, tol);
    std::vector<Complex> roots = found.roots;
    // B' has no zeros on the circle, so a merged cluster sitting across it
    // is two nearby simple pairs and the raw iterates are kept instead.
    bool simple = true, straddles = false;
    for (const RootCluster& c : found.clusters) {
      if (c.multiplicity == 1) continue;
      simple = false;
      straddles = straddles || std::abs(std::abs(c.value) - 1.0) < 0.1;
    }
    if (straddles) roots = found.approximations;
    if (simple || straddles) polish_roots(zeros, roots);
    for (const Complex& z : roots) {
      if (std::abs(z) < 1.0) data.points.push_back(z);
    }
  }
  if (static_cast<int>(data.points.size()) != b.degree() - 1) {
    throw Error(ErrorCode::kCountMismatch,
                "critical point count in the disk differs from degree - 1");
  }
  for (const Complex& z : data.points) {
    bool at_zero = false;
    for (const RootCluster& c : zeros) at_zero = at_zero || (c.multiplicity > 1 && z == c.value);
    data.values.push_back(at_zero ? Complex(0.0) : b.evaluate(z, tol));
  }
  data.point_clusters = cluster_points(data.points, tol.cluster_tol);
  data.distinct_values = cluster_points(data.values, tol.cluster_tol);
  return data;
}

ValueBound check_value_bound(const CompositionChain& chain,
                             const ToleranceConfig& tol) {
  ValueBound out;
  for (int d : chain.factor_degrees()) out.bound += d - 1;
  const CriticalData data = critical_data(chain.expand(tol), tol);
  out.distinct_values = static_cast<int>(data.distinct_values.size());
  out.satisfied = out.distinct_values <= out.bound;
  return out;
}

std::optional<OneValueForm> one_critical_value_form(const BlaschkeProduct& b,
                                                    const ToleranceConfig& tol) {
  if (b.degree() < 2) return std::nullopt;
  const CriticalData data = critical_data(b, tol);
  if (data.distinct_values.size() != 1 || data.point_clusters.size() != 1) {
    return std::nullopt;
  }
  const Complex a = data.point_clusters.front().value;
  const Complex v = b.evaluate(a, tol);
  const int n = b.degree();
  const DiskAutomorphism phi = DiskAutomorphism::involution(a);
  // tau(w) = (v - rho w) / (1 - conj(v) rho w); rho from three circle points.
  Complex rho_sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Complex z = std::polar(1.0, 2.0 * kPi * (k + 0.25) / 3.0);
    const Complex w = std::pow(phi(z), n);
    const Complex bz = b.evaluate(z, tol);
    rho_sum += (v - bz) / (1.0 - bz * std::conj(v)) / w;
  }
  const Complex rho = rho_sum / std::abs(rho_sum);
  const DiskAutomorphism tau(rho, v / rho);
  OneValueForm form{tau, a, 0.0};
  form.error = circle_sup_distance(
      [&](Complex z) { return b.evaluate(z); },
      [&](Complex z) { return tau(std::pow(phi(z), n)); }, 64);
  if (form.error > 1e-8) {
    throw Error(ErrorCode::kVerificationFailure,
                "one-critical-value form does not reproduce the product");
  }
  return form;
}

CompositionChain factor_any_order(const BlaschkeProduct& b,
                                  std::span<const int> degrees,
                                  const ToleranceConfig& tol) {
  int total = 1;
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::kInvalidInput, "factor degrees must be positive");
    total *= d;
  }
  if (degrees.empty() || total != b.degree()) {
    throw Error(ErrorCode::kInvalidInput, "factor degrees must multiply to the degree");
  }
  const auto form = one_critical_value_form(b, tol);
  if (!form) {
    throw Error(ErrorCode::kInvalidInput, "product has more than one critical value");
  }
  std::vector<BlaschkeProduct> factors;
  const std::size_t m = degrees.size();
  if (m == 1) {
    factors.push_back(compose(form->tau, involution_power(form->a, degrees[0]), tol));
  } else {
    factors.push_back(compose(form->tau, BlaschkeProduct::power(degrees[m - 1]), tol));
    for (std::size_t i = m - 1; i-- > 1;) {
      factors.push_back(BlaschkeProduct::power(degrees[i]));
    }
    factors.push_back(involution_power(form->a, degrees[0]));
  }
  CompositionChain chain(std::move(factors));
  const double err = circle_sup_distance(
      [&](Complex z) { return b.evaluate(z); },
      [&](Complex z) { return chain.evaluate(z); }, 64);
  if (err > 1e-8) {
    throw Error(ErrorCode::kVerificationFailure, "factored chain does not reproduce B");
  }
  return chain;
}

double walsh_hull_distance(const BlaschkeProduct& b, Complex p) {
  std::vector<Complex> pts{0.0};
  pts.insert(pts.end(), b.zeros().begin(), b.zeros().end());
  std::sort(pts.begin(), pts.end(), [](Complex x, Complex y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return std::abs(p - pts[0]);
  // Andrew's monotone chain, counterclockwise.
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() <= 2) {
    return segment_distance(p, hull.front(), hull.back());
  }
  bool inside = true;
  double best = 1e300;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex c = hull[(i + 1) % hull.size()];
    if (cross(a, c, p) < 0.0) inside = false;
    best = std::min(best, segment_distance(p, a, c));
  }
  return inside ? 0.0 : best;
}

}  // namespace blaschke
