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

#include <algorithm>
#include <cmath>
#include <utility>

#include "blaschke/critical.hpp"
#include "blaschke/error.hpp"
#include "blaschke/product.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;

double critical_value_gap(Complex w, const CriticalData& data) {
  double gap = 1.0 - std::abs(w);
  for (const RootCluster& v : data.distinct_values) gap = std::min(gap, std::abs(w - v.value));
  return gap;
}

// Base points whose value is this far from every critical value are taken
// as soon as they are seen; otherwise the best candidate wins.
constexpr double kComfortableGap = 1e-2;

}  // namespace

NormalizedForm normalize(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  const CriticalData data = critical_data(b, tol);
  std::vector<Complex> candidates{0.0};
  for (int k = 1; k <= 5; ++k) {
    for (int j = 0; j < 16; ++j) {
      candidates.push_back(std::polar(0.1 * k, 2.0 * kPi * j / 16.0));
    }
  }
  std::vector<std::pair<double, Complex>> ranked;
  for (const Complex& beta : candidates) {
    const double gap = critical_value_gap(b.evaluate(beta, tol), data);
    if (gap <= tol.cluster_tol) continue;
    ranked.emplace_back(gap, beta);
    if (gap >= kComfortableGap) break;
  }
  if (!ranked.empty() && ranked.back().first < kComfortableGap) {
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
  } else if (!ranked.empty()) {
    ranked = {ranked.back()};
  }
  for (const auto& [gap, beta] : ranked) {
    const Complex alpha = b.evaluate(beta, tol);
    const DiskAutomorphism inner = DiskAutomorphism::involution(beta);
    const DiskAutomorphism phi_alpha = DiskAutomorphism::involution(alpha);
    std::vector<Complex> zeros;
    for (const Complex& z : fiber(b, alpha, tol)) zeros.push_back(inner(z));
    BlaschkeProduct n0(1.0, zeros);
    // Match the constant at a circle point, then rotate so N'(0) > 0.
    const Complex probe = std::polar(1.0, 0.3);
    const Complex target = phi_alpha(b.evaluate(inner(probe), tol));
    n0 = rotate(n0, target / n0.evaluate(probe, tol));
    const Complex d0 = n0.derivative(0.0, tol);
    if (std::abs(d0) <= tol.root_tol) continue;
    const Complex lambda = std::conj(d0) / std::abs(d0);
    return NormalizedForm{rotate(n0, lambda), inner, DiskAutomorphism(lambda, alpha),
                          alpha, beta, lambda};
  }
  throw Error(ErrorCode::kDegenerateInput, "no regular base point found for normalization");
}

std::vector<std::pair<Complex, Complex>> positive_ratio_pairs(
    std::span<const Complex> values, const ToleranceConfig& tol) {
  std::vector<std::pair<Complex, Complex>> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const Complex u = values[i], v = values[j];
      if (std::abs(u - v) <= tol.cluster_tol) continue;
      if (std::abs(u) <= tol.cluster_tol || std::abs(v) <= tol.cluster_tol) continue;
      const Complex ratio = u / v;
      if (ratio.real() > 0.0 && std::abs(ratio.imag()) <= tol.cluster_tol * std::abs(ratio)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

RegularizedCheck is_regularized(const BlaschkeProduct& b, const ToleranceConfig& tol) {
  RegularizedCheck out;
  out.vanishes_at_zero = std::abs(b.evaluate(0.0, tol)) <= tol.cluster_tol;
  out.simple_zeros = cluster_points(b.zeros(), tol.cluster_tol).size() == b.zeros().size();
  const CriticalData data = critical_data(b, tol);
  std::vector<Complex> values;
  for (const RootCluster& v : data.distinct_values) values.push_back(v.value);
  out.violations = positive_ratio_pairs(values, tol);
  out.regularized = out.vanishes_at_zero && out.simple_zeros && out.violations.empty();
  return out;
}

}  // namespace blaschke
