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


#ifndef BLASCHKE_MONODROMY_HPP_
#define BLASCHKE_MONODROMY_HPP_

#include <span>
#include <vector>

#include "blaschke/permutation.hpp"
#include "blaschke/product.hpp"

namespace blaschke {

// A straight segment (radius == 0) or a circular arc about `center` from
// angle `start` through signed angle `sweep`.
struct PathPiece {
  Complex from;
  Complex to;
  Complex center;
  double radius = 0.0;
  double start = 0.0;
  double sweep = 0.0;

  Complex point(double s) const;
  Complex velocity(double s) const;  // d point / ds
  double length() const;
};

struct LoopSpec {
  Complex target;
  double radius = 0.0;  // of the circle around target
  std::vector<PathPiece> pieces;  // closed, based at 0
  std::vector<Complex> avoid;     // every critical value; steps stay clear of them
};

// One loop per critical value: a ray from 0 toward the value, detouring
// counterclockwise around the exclusion disks of values in the way, a
// counterclockwise circle and the same way back. Exclusion radii are 0.45
// times the smallest of the distances to other values, to the circle and
// to the base point. Throws Error(kGeometryFailure) when two values are
// within cluster_tol or a value sits at the base point.
std::vector<LoopSpec> build_loops(std::span<const Complex> values,
                                  const ToleranceConfig& tol = {});

struct TrackingOptions {
  double max_step = 0.02;    // bound on |delta w| per step
  double newton_tol = 1e-12;
  int max_newton = 5;
  double min_step = 1e-9;
};

// Follows the branch of B^{-1} starting at `start` along the loop. Throws
// Error(kTrackingFailure) on step underflow.
Complex continue_branch(const BlaschkeProduct& b, const LoopSpec& loop, Complex start,
                        const TrackingOptions& options = {},
                        const ToleranceConfig& tol = {});

// Branch labels: zeros sorted by (argument, modulus).
std::vector<Complex> branch_labels(const BlaschkeProduct& b);

// Permutation of the labels induced by the loop. Throws
// Error(kNonBijective) when an end point is not near a unique label.
Permutation loop_permutation(const BlaschkeProduct& b, std::span<const Complex> labels,
                             const LoopSpec& loop, const TrackingOptions& options = {},
                             const ToleranceConfig& tol = {});

struct MonodromyResult {
  BlaschkeProduct product;  // the product whose fiber over 0 is labelled
  bool normalized = false;  // true when product = normalize(input)
  std::vector<Complex> labels;
  std::vector<Complex> critical_values;
  std::vector<LoopSpec> loops;
  std::vector<Permutation> generators;
  PermutationGroup group;
};

// Generators of the monodromy group at base 0. Inputs whose zeros are not
// simple are normalized first.
MonodromyResult monodromy_group(const BlaschkeProduct& b,
                                const TrackingOptions& options = {},
                                const ToleranceConfig& tol = {});

struct CrossValidation {
  std::vector<int> inner_degrees;
  std::vector<bool> has_block_system;
  std::vector<bool> factor_found;
  bool agree = false;
};

// Block systems with blocks of size k against inner factors of degree k.
CrossValidation cross_validate(const BlaschkeProduct& b, const MonodromyResult& m,
                               const ToleranceConfig& tol = {});

}  // namespace blaschke

#endif  // BLASCHKE_MONODROMY_HPP_
