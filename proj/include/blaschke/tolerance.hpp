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

#ifndef BLASCHKE_TOLERANCE_HPP_
#define BLASCHKE_TOLERANCE_HPP_

namespace blaschke {

// Numerical thresholds shared by every module. All must be strictly
// positive and cluster_tol must exceed root_tol.
struct ToleranceConfig {
  double root_tol = 1e-12;
  double cluster_tol = 1e-8;
  double identity_tol = 1e-9;
  double conic_residual_tol = 1e-6;
  int circle_samples = 512;

  // Throws Error(kInvalidInput) when the invariants above do not hold.
  void validate() const;
};

}  // namespace blaschke

#endif  // BLASCHKE_TOLERANCE_HPP_
