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

#ifndef BLASCHKE_PRODUCT_HPP_
#define BLASCHKE_PRODUCT_HPP_

#include <algorithm>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "blaschke/tolerance.hpp"

namespace blaschke {

using Complex = std::complex<double>;

// Finite Blaschke product gamma * prod_j (z - a_j) / (1 - conj(a_j) z).
// Immutable once constructed; zeros are kept in the order given.
class BlaschkeProduct {
 public:
  // Throws Error(kInvalidInput) unless |gamma| = 1 (to 1e-12, then
  // renormalized), every zero lies in the open disk and there is at least one.
  BlaschkeProduct(Complex gamma, std::vector<Complex> zeros);

  // z^n
  static BlaschkeProduct power(int n);

  Complex gamma() const { return gamma_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  // Factor-by-factor product. On the unit circle the modulus drift is
  // removed. Throws Error(kPoleProximity) when some |1 - conj(a_j) z| is
  // below tol.root_tol.
  Complex evaluate(Complex z, const ToleranceConfig& tol = {}) const;
  Complex operator()(Complex z) const { return evaluate(z); }

  // B'(z) via the logarithmic derivative, switching to the product rule
  // next to a zero where B(z)/(z - a_j) is removable.
  Complex derivative(Complex z, const ToleranceConfig& tol = {}) const;

 private:
  Complex gamma_;
  std::vector<Complex> zeros_;
};

// z -> rotation * (center - z) / (1 - conj(center) z). With rotation = 1
// this is the self-inverse involution phi_a.
class DiskAutomorphism {
 public:
  DiskAutomorphism(Complex rotation, Complex center);

  static DiskAutomorphism involution(Complex a) { return {1.0, a}; }
  static DiskAutomorphism identity() { return {-1.0, 0.0}; }
  static DiskAutomorphism rotation_by(Complex r) { return {-r, 0.0}; }

  Complex rotation() const { return rotation_; }
  Complex center() const { return center_; }

  Complex evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z); }
  Complex derivative(Complex z) const;

  DiskAutomorphism inverse() const;
  BlaschkeProduct as_product() const;

 private:
  Complex rotation_;
  Complex center_;
};

// (outer o inner) for automorphisms.
DiskAutomorphism compose(const DiskAutomorphism& outer,
                         const DiskAutomorphism& inner);

// B = factors[0] o factors[1] o ... o factors.back(); the innermost factor is
// last.
class CompositionChain {
 public:
  explicit CompositionChain(std::vector<BlaschkeProduct> factors);

  const std::vector<BlaschkeProduct>& factors() const { return factors_; }
  int degree() const;
  std::vector<int> factor_degrees() const;

  // Nested evaluation, no expansion.
  Complex evaluate(Complex z) const;

  // Expanded product through repeated compose().
  BlaschkeProduct expand(const ToleranceConfig& tol = {}) const;

 private:
  std::vector<BlaschkeProduct> factors_;
};

// Expanded outer o inner. The zeros of the result are the fibers
// inner^{-1}(w) over the zeros w of outer; fibers over 0 are copied exactly.
// Throws Error(kSolverFailure) when a fiber cannot be resolved.
BlaschkeProduct compose(const BlaschkeProduct& outer,
                        const BlaschkeProduct& inner,
                        const ToleranceConfig& tol = {});
BlaschkeProduct compose(const DiskAutomorphism& outer,
                        const BlaschkeProduct& inner,
                        const ToleranceConfig& tol = {});
BlaschkeProduct compose(const BlaschkeProduct& outer,
                        const DiskAutomorphism& inner);

// All z in the disk (with multiplicity) with B(z) = w.
std::vector<Complex> fiber(const BlaschkeProduct& b, Complex w,
                           const ToleranceConfig& tol = {});

// z * B(z)
BlaschkeProduct hat(const BlaschkeProduct& b);

// lambda * B for unimodular lambda.
BlaschkeProduct rotate(const BlaschkeProduct& b, Complex lambda);

struct NormalizedForm {
  BlaschkeProduct product;     // N = outer o B o inner
  DiskAutomorphism inner;      // phi_beta
  DiskAutomorphism outer;      // lambda * phi_alpha
  Complex alpha;
  Complex beta;
  Complex lambda;
};

// Cowen normal form: N(0) = 0, N'(0) > 0, all zeros of N simple.
// Throws Error(kDegenerateInput) if no admissible base point is found.
NormalizedForm normalize(const BlaschkeProduct& b,
                         const ToleranceConfig& tol = {});

// Unique fixed point in the open disk. Throws Error(kNoInteriorFixedPoint)
// for maps without one (hyperbolic or parabolic).
Complex fixed_point(const DiskAutomorphism& phi);

struct RegularizedCheck {
  bool regularized = false;
  bool vanishes_at_zero = false;
  bool simple_zeros = false;
  // Distinct critical values with positive real ratio.
  std::vector<std::pair<Complex, Complex>> violations;
};

RegularizedCheck is_regularized(const BlaschkeProduct& b,
                                const ToleranceConfig& tol = {});

// The critical-value half of the check, for a precomputed value list.
std::vector<std::pair<Complex, Complex>> positive_ratio_pairs(
    std::span<const Complex> distinct_values, const ToleranceConfig& tol = {});

// Sup |f - g| over `samples` equispaced unit-circle points.
template <typename F, typename G>
double circle_sup_distance(const F& f, const G& g, int samples) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * 3.14159265358979323846 * k / samples;
    const Complex z = std::polar(1.0, t);
    worst = std::max(worst, std::abs(f(z) - g(z)));
  }
  return worst;
}

}  // namespace blaschke

#endif  // BLASCHKE_PRODUCT_HPP_
