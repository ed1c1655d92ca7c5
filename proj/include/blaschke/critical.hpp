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


#ifndef BLASCHKE_CRITICAL_HPP_
#define BLASCHKE_CRITICAL_HPP_

#include <optional>
#include <span>
#include <vector>

#include "blaschke/polynomial.hpp"
#include "blaschke/product.hpp"

namespace blaschke {

struct CriticalData {
  std::vector<Complex> points;             // n - 1 entries, with multiplicity
  std::vector<Complex> values;             // B(points[i])
  std::vector<RootCluster> point_clusters;
  std::vector<RootCluster> distinct_values;  // multiplicity counts points
};

// P'Q - PQ' for P = prod (z - a_j), Q = prod (1 - conj(a_j) z).
Polynomial derivative_numerator(const BlaschkeProduct& b);

// Critical points in the disk. Each distinct zero of multiplicity m is a
// critical point of multiplicity m - 1; the remaining ones are the disk
// roots of the logarithmic-derivative numerator taken over distinct zeros.
// Throws Error(kCountMismatch) if the disk count is not deg - 1.
CriticalData critical_data(const BlaschkeProduct& b,
                           const ToleranceConfig& tol = {});

// Single-linkage grouping at distance tol; representatives are means.
std::vector<RootCluster> cluster_points(std::span<const Complex> points,
                                        double tol);

struct ValueBound {
  int distinct_values = 0;
  int bound = 0;
  bool satisfied = false;
};

// Distinct critical values of the expanded chain against sum (deg_i - 1).
ValueBound check_value_bound(const CompositionChain& chain,
                             const ToleranceConfig& tol = {});

struct OneValueForm {
  DiskAutomorphism tau;
  Complex a;
  double error = 0.0;  // sup over 64 circle samples
};

// B = tau o phi_a^n when B has a single critical value, otherwise empty.
// Throws Error(kVerificationFailure) if the detected form misses B by 1e-8.
std::optional<OneValueForm> one_critical_value_form(
    const BlaschkeProduct& b, const ToleranceConfig& tol = {});

// Chain for a single-critical-value product with factor degrees taken from
// `degrees`, innermost first: the innermost factor is phi_a^{degrees[0]},
// the outermost carries tau. Throws Error(kInvalidInput) when the degrees do
// not multiply to deg B, Error(kVerificationFailure) on a failed re-check.
CompositionChain factor_any_order(const BlaschkeProduct& b,
                                  std::span<const int> degrees,
                                  const ToleranceConfig& tol = {});

// Euclidean distance from p to the convex hull of {0} and the zeros of b.
double walsh_hull_distance(const BlaschkeProduct& b, Complex p);

}  // namespace blaschke

#endif  // BLASCHKE_CRITICAL_HPP_
