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


#ifndef BLASCHKE_DECOMPOSE_HPP_
#define BLASCHKE_DECOMPOSE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "blaschke/product.hpp"

namespace blaschke {

// B = outer o inner with inner(0) = 0.
struct Factorization {
  BlaschkeProduct outer;
  BlaschkeProduct inner;
  double error = 0.0;  // sup |outer(inner(z)) - B(z)| over 100 circle points
};

struct InnerDegree2 {
  Factorization factors;
  Complex a;  // inner = z (z - a) / (1 - conj(a) z)
};

// Degree-2 inner factor through the invariance B o phi_a = B, with a
// running over the zeros of phi_{B(0)} o B. Empty when no candidate works.
std::optional<InnerDegree2> inner_degree2(const BlaschkeProduct& b,
                                          const ToleranceConfig& tol = {});

enum class SearchStatus { kFound, kNotFound, kSolverFailure };

const char* search_status_name(SearchStatus status);

struct InnerFactorResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Factorization> factors;
  int starts = 0;
  std::string detail;
};

// Inner factor of degree k from the orbits of the k-element invariant
// subgroup generated by g^{n/k}. Throws Error(kInvalidInput) unless k
// divides n with 1 < k < n.
InnerFactorResult inner_factor_general(const BlaschkeProduct& b, int k,
                                       const ToleranceConfig& tol = {});

struct ShapeAttempt {
  std::vector<int> degrees;  // outermost first
  SearchStatus status = SearchStatus::kNotFound;
  double error = 0.0;
  std::string detail;
};

struct DecompositionReport {
  int degree = 0;
  std::vector<CompositionChain> chains;
  std::vector<double> errors;
  std::vector<ShapeAttempt> attempts;
};

// Full chain of degree-2 factors for deg B = 2^n; the chain is stored
// outermost first. On failure the report holds no chain and the attempt
// records the level that failed.
DecompositionReport chain_2n(const BlaschkeProduct& b, const ToleranceConfig& tol = {});

// Repeatedly peels prime-degree inner factors until the outer factor has
// prime degree or no inner factor is found.
CompositionChain decompose_chain(const BlaschkeProduct& b, const ToleranceConfig& tol = {});

// Two-factor shapes for every proper divisor, plus the 2^n chain when it
// applies. Attempts are sorted by inner degree.
DecompositionReport decompose_report(const BlaschkeProduct& b,
                                     const ToleranceConfig& tol = {});

struct EllipticDecomposableCheck {
  bool elliptical = false;
  std::vector<int> divisors;           // inner degrees k
  std::vector<SearchStatus> outcomes;  // per divisor
  bool consistent = false;             // elliptical implies every shape found
};

EllipticDecomposableCheck elliptical_implies_decomposable_check(
    const BlaschkeProduct& b, const ToleranceConfig& tol = {});

}  // namespace blaschke

#endif  // BLASCHKE_DECOMPOSE_HPP_
