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

#include "blaschke/product.hpp"

#include <array>
#include <cmath>
#include <map>

#include "blaschke/error.hpp"
#include "blaschke/polynomial.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool unimodular(Complex c, double tol) {
  return std::abs(std::abs(c) - 1.0) <= tol;
}

Complex unit(Complex c) { return c / std::abs(c); }

// Unimodular constant gamma with gamma * prod(zeros) equal to target(z) at a
// circle point kept away from all zeros.
template <typename F>
Complex match_gamma(const std::vector<Complex>& zeros, const F& target) {
  Complex best_z = 1.0;
  double best_gap = -1.0;
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(1.0, 2.0 * kPi * (k + 0.37) / 16.0);
    double gap = 2.0;
    for (const Complex& a : zeros) gap = std::min(gap, std::abs(z - a));
    if (gap > best_gap) {
      best_gap = gap;
      best_z = z;
    }
  }
  Complex p = 1.0;
  for (const Complex& a : zeros) p *= (best_z - a) / (1.0 - std::conj(a) * best_z);
  return unit(target(best_z) / p);
}

}  // namespace

void ToleranceConfig::validate() const {
  if (!(root_tol > 0.0) || !(cluster_tol > 0.0) || !(identity_tol > 0.0) ||
      !(conic_residual_tol > 0.0) || circle_samples <= 0) {
    throw Error(ErrorCode::kInvalidInput, "tolerances must be strictly positive");
  }
  if (!(cluster_tol > root_tol)) {
    throw Error(ErrorCode::kInvalidInput, "cluster_tol must exceed root_tol");
  }
}

BlaschkeProduct::BlaschkeProduct(Complex gamma, std::vector<Complex> zeros)
    : gamma_(gamma), zeros_(std::move(zeros)) {
  if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()) ||
      !unimodular(gamma, 1e-12)) {
    throw Error(ErrorCode::kInvalidInput, "gamma must have modulus 1");
  }
  gamma_ = unit(gamma);
  if (zeros_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "a Blaschke product needs a zero");
  }
  for (const Complex& a : zeros_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !(std::abs(a) < 1.0)) {
      throw Error(ErrorCode::kInvalidInput, "zeros must lie in the open unit disk");
    }
  }
}

BlaschkeProduct BlaschkeProduct::power(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "power needs n >= 1");
  return BlaschkeProduct(1.0, std::vector<Complex>(static_cast<std::size_t>(n), 0.0));
}

Complex BlaschkeProduct::evaluate(Complex z, const ToleranceConfig& tol) const {
  Complex value = gamma_;
  for (const Complex& a : zeros_) {
    const Complex den = 1.0 - std::conj(a) * z;
    if (std::abs(den) <= tol.root_tol) {
      throw Error(ErrorCode::kPoleProximity, "evaluation point is at a pole");
    }
    value *= (z - a) / den;
  }
  if (std::abs(std::abs(z) - 1.0) <= 1e-13) value = unit(value);
  return value;
}

Complex BlaschkeProduct::derivative(Complex z, const ToleranceConfig& tol) const {
  double nearest = 2.0;
  for (const Complex& a : zeros_) nearest = std::min(nearest, std::abs(z - a));
  if (nearest > 1e-6) {
    Complex sum = 0.0;
    for (const Complex& a : zeros_) {
      const Complex den = 1.0 - std::conj(a) * z;
      if (std::abs(den) <= tol.root_tol) {
        throw Error(ErrorCode::kPoleProximity, "evaluation point is at a pole");
      }
      sum += (1.0 - std::norm(a)) / ((z - a) * den);
    }
    return evaluate(z, tol) * sum;
  }
  // Product rule; every term is finite next to a zero.
  const std::size_t n = zeros_.size();
  std::vector<Complex> f(n), df(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex den = 1.0 - std::conj(zeros_[j]) * z;
    if (std::abs(den) <= tol.root_tol) {
      throw Error(ErrorCode::kPoleProximity, "evaluation point is at a pole");
    }
    f[j] = (z - zeros_[j]) / den;
    df[j] = (1.0 - std::norm(zeros_[j])) / (den * den);
  }
  Complex total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Complex term = df[j];
    for (std::size_t l = 0; l < n; ++l) {
      if (l != j) term *= f[l];
    }
    total += term;
  }
  return gamma_ * total;
}

DiskAutomorphism::DiskAutomorphism(Complex rotation, Complex center)
    : rotation_(rotation), center_(center) {
  if (!unimodular(rotation, 1e-12)) {
    throw Error(ErrorCode::kInvalidInput, "rotation must have modulus 1");
  }
  rotation_ = unit(rotation);
  if (!(std::abs(center) < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "center must lie in the open unit disk");
  }
}

Complex DiskAutomorphism::evaluate(Complex z) const {
  const Complex den = 1.0 - std::conj(center_) * z;
  if (std::abs(den) == 0.0) {
    throw Error(ErrorCode::kPoleProximity, "evaluation point is at a pole");
  }
  return rotation_ * (center_ - z) / den;
}

Complex DiskAutomorphism::derivative(Complex z) const {
  const Complex den = 1.0 - std::conj(center_) * z;
  return rotation_ * (std::norm(center_) - 1.0) / (den * den);
}

DiskAutomorphism DiskAutomorphism::inverse() const {
  return {std::conj(rotation_), rotation_ * center_};
}

BlaschkeProduct DiskAutomorphism::as_product() const {
  return BlaschkeProduct(-rotation_, {center_});
}

DiskAutomorphism compose(const DiskAutomorphism& outer,
                         const DiskAutomorphism& inner) {
  // z -> r (c - z) / (1 - conj(c) z) as the matrix [[-r, r c], [-conj(c), 1]].
  auto matrix = [](const DiskAutomorphism& f) {
    const Complex r = f.rotation(), c = f.center();
    return std::array<Complex, 4>{-r, r * c, -std::conj(c), 1.0};
  };
  const auto m = matrix(outer);
  const auto n = matrix(inner);
  const Complex alpha = m[0] * n[0] + m[1] * n[2];
  const Complex beta = m[0] * n[1] + m[1] * n[3];
  const Complex delta = m[2] * n[1] + m[3] * n[3];
  return {unit(-alpha / delta), -beta / alpha};
}

CompositionChain::CompositionChain(std::vector<BlaschkeProduct> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "a chain needs at least one factor");
  }
}

int CompositionChain::degree() const {
  int d = 1;
  for (const auto& f : factors_) d *= f.degree();
  return d;
}

std::vector<int> CompositionChain::factor_degrees() const {
  std::vector<int> out;
  for (const auto& f : factors_) out.push_back(f.degree());
  return out;
}

Complex CompositionChain::evaluate(Complex z) const {
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) z = it->evaluate(z);
  return z;
}

BlaschkeProduct CompositionChain::expand(const ToleranceConfig& tol) const {
  BlaschkeProduct result = factors_.back();
  for (std::size_t i = factors_.size() - 1; i-- > 0;) {
    result = compose(factors_[i], result, tol);
  }
  return result;
}

std::vector<Complex> fiber(const BlaschkeProduct& b, Complex w,
                           const ToleranceConfig& tol) {
  if (!(std::abs(w) < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "fiber value must lie in the open disk");
  }
  if (w == 0.0) return b.zeros();
  // gamma P(z) - w Q(z) with P = prod (z - a), Q = prod (1 - conj(a) z).
  Polynomial p{1.0}, q{1.0};
  for (const Complex& a : b.zeros()) {
    const Complex pf[2] = {-a, 1.0};
    const Complex qf[2] = {1.0, -std::conj(a)};
    p = poly_multiply(p, pf);
    q = poly_multiply(q, qf);
  }
  Polynomial eq(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) eq[k] = b.gamma() * p[k] - w * q[k];
  const PolynomialRoots roots = polynomial_roots(eq, tol);
  std::vector<Complex> out;
  for (const RootCluster& c : roots.clusters) {
    Complex z = c.value;
    if (c.multiplicity == 1) {
      for (int it = 0; it < 3; ++it) {
        const Complex r = b.evaluate(z) - w;
        const Complex next = z - r / b.derivative(z);
        if (!(std::abs(next) < 1.0) || std::abs(b.evaluate(next) - w) >= std::abs(r)) {
          break;
        }
        z = next;
      }
    }
    if (!(std::abs(z) < 1.0)) {
      throw Error(ErrorCode::kSolverFailure, "fiber point left the unit disk");
    }
    for (int k = 0; k < c.multiplicity; ++k) out.push_back(z);
  }
  if (static_cast<int>(out.size()) != b.degree()) {
    throw Error(ErrorCode::kSolverFailure, "fiber has the wrong number of points");
  }
  return out;
}

BlaschkeProduct compose(const BlaschkeProduct& outer,
                        const BlaschkeProduct& inner,
                        const ToleranceConfig& tol) {
  std::vector<Complex> zeros;
  std::map<std::pair<double, double>, std::vector<Complex>> cache;
  for (const Complex& w : outer.zeros()) {
    auto key = std::make_pair(w.real(), w.imag());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fiber(inner, w, tol)).first;
    zeros.insert(zeros.end(), it->second.begin(), it->second.end());
  }
  const Complex gamma = match_gamma(zeros, [&](Complex z) {
    return outer.evaluate(inner.evaluate(z));
  });
  return BlaschkeProduct(gamma, std::move(zeros));
}

BlaschkeProduct compose(const DiskAutomorphism& outer,
                        const BlaschkeProduct& inner,
                        const ToleranceConfig& tol) {
  std::vector<Complex> zeros = fiber(inner, outer.center(), tol);
  const Complex gamma = match_gamma(zeros, [&](Complex z) {
    return outer.evaluate(inner.evaluate(z));
  });
  return BlaschkeProduct(gamma, std::move(zeros));
}

BlaschkeProduct compose(const BlaschkeProduct& outer,
                        const DiskAutomorphism& inner) {
  const DiskAutomorphism inv = inner.inverse();
  std::vector<Complex> zeros;
  for (const Complex& a : outer.zeros()) zeros.push_back(inv.evaluate(a));
  const Complex gamma = match_gamma(zeros, [&](Complex z) {
    return outer.evaluate(inner.evaluate(z));
  });
  return BlaschkeProduct(gamma, std::move(zeros));
}

BlaschkeProduct hat(const BlaschkeProduct& b) {
  std::vector<Complex> zeros{0.0};
  zeros.insert(zeros.end(), b.zeros().begin(), b.zeros().end());
  return BlaschkeProduct(b.gamma(), std::move(zeros));
}

BlaschkeProduct rotate(const BlaschkeProduct& b, Complex lambda) {
  return BlaschkeProduct(lambda * b.gamma(), b.zeros());
}

Complex fixed_point(const DiskAutomorphism& phi) {
  const Complex r = phi.rotation();
  const Complex c = phi.center();
  if (c == 0.0) return 0.0;
  // conj(c) z^2 - (1 + r) z + r c = 0
  const Complex qa = std::conj(c);
  const Complex qb = -(1.0 + r);
  const Complex qc = r * c;
  const Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  const Complex s = (std::real(std::conj(qb) * disc) >= 0.0) ? qb + disc : qb - disc;
  std::vector<Complex> cands;
  if (std::abs(s) > 0.0) {
    cands.push_back(-s / (2.0 * qa));
    cands.push_back(-2.0 * qc / s);
  } else {
    cands.push_back(-qb / (2.0 * qa));
  }
  for (const Complex& z : cands) {
    if (std::abs(z) < 1.0 - 1e-12) return z;
  }
  throw Error(ErrorCode::kNoInteriorFixedPoint,
              "automorphism has no fixed point in the open disk");
}

}  // namespace blaschke
