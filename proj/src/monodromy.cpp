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

#include "blaschke/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "blaschke/critical.hpp"
#include "blaschke/decompose.hpp"
#include "blaschke/error.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

PathPiece segment(Complex from, Complex to) {
  PathPiece p;
  p.from = from;
  p.to = to;
  return p;
}

PathPiece arc(Complex center, double radius, double start, double sweep) {
  PathPiece p;
  p.center = center;
  p.radius = radius;
  p.start = start;
  p.sweep = sweep;
  p.from = center + std::polar(radius, start);
  p.to = center + std::polar(radius, start + sweep);
  return p;
}

PathPiece reversed(const PathPiece& p) {
  if (p.radius == 0.0) return segment(p.to, p.from);
  return arc(p.center, p.radius, p.start + p.sweep, -p.sweep);
}

bool label_less(Complex a, Complex b) {
  const double aa = std::arg(a), ab = std::arg(b);
  if (aa != ab) return aa < ab;
  return std::abs(a) < std::abs(b);
}

}  // namespace

Complex PathPiece::point(double s) const {
  if (radius == 0.0) return from + s * (to - from);
  return center + std::polar(radius, start + s * sweep);
}

Complex PathPiece::velocity(double s) const {
  if (radius == 0.0) return to - from;
  return Complex(0.0, sweep) * std::polar(radius, start + s * sweep);
}

double PathPiece::length() const {
  return radius == 0.0 ? std::abs(to - from) : radius * std::abs(sweep);
}

std::vector<LoopSpec> build_loops(std::span<const Complex> values,
                                  const ToleranceConfig& tol) {
  const std::size_t n = values.size();
  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex c = values[i];
    if (!(std::abs(c) < 1.0)) {
      throw Error(ErrorCode::kGeometryFailure, "critical value outside the open disk");
    }
    if (std::abs(c) <= tol.cluster_tol) {
      throw Error(ErrorCode::kGeometryFailure, "critical value at the base point");
    }
    double gap = std::min(1.0 - std::abs(c), std::abs(c));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = std::abs(c - values[j]);
      if (d <= tol.cluster_tol) {
        throw Error(ErrorCode::kGeometryFailure, "critical values are not separated");
      }
      gap = std::min(gap, d);
    }
    rho[i] = 0.45 * gap;
  }
  std::vector<LoopSpec> loops;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex c = values[i];
    const Complex dir = c / std::abs(c);
    const double reach = std::abs(c) - rho[i];
    struct Obstacle {
      double enter, leave;
      std::size_t index;
    };
    std::vector<Obstacle> hits;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex local = values[j] * std::conj(dir);
      const double off = std::abs(local.imag());
      if (off >= rho[j]) continue;
      const double half = std::sqrt(rho[j] * rho[j] - off * off);
      if (local.real() + half <= 0.0 || local.real() - half >= reach) continue;
      hits.push_back({local.real() - half, local.real() + half, j});
    }
    std::sort(hits.begin(), hits.end(),
              [](const Obstacle& a, const Obstacle& b) { return a.enter < b.enter; });
    LoopSpec loop;
    loop.avoid.assign(values.begin(), values.end());
    loop.target = c;
    loop.radius = rho[i];
    Complex cur = 0.0;
    for (const Obstacle& h : hits) {
      const Complex entry = h.enter * dir;
      const Complex exit = h.leave * dir;
      const Complex center = values[h.index];
      loop.pieces.push_back(segment(cur, entry));
      const double a0 = std::arg(entry - center);
      double sweep = std::arg(exit - center) - a0;
      while (sweep <= 0.0) sweep += kTwoPi;
      while (sweep > kTwoPi) sweep -= kTwoPi;
      loop.pieces.push_back(arc(center, rho[h.index], a0, sweep));
      cur = exit;
    }
    const Complex end = reach * dir;
    loop.pieces.push_back(segment(cur, end));
    const std::size_t outward = loop.pieces.size();
    loop.pieces.push_back(arc(c, rho[i], std::arg(-dir), kTwoPi));
    for (std::size_t k = outward; k-- > 0;) loop.pieces.push_back(reversed(loop.pieces[k]));
    loops.push_back(std::move(loop));
  }
  return loops;
}

Complex continue_branch(const BlaschkeProduct& b, const LoopSpec& loop, Complex start,
                        const TrackingOptions& options, const ToleranceConfig& tol) {
  Complex z = start;
  for (const PathPiece& piece : loop.pieces) {
    const double len = piece.length();
    if (len == 0.0) continue;
    const double nominal = std::min(1.0, options.max_step / len);
    double h = nominal;
    double s = 0.0;
    while (s < 1.0) {
      h = std::min(h, 1.0 - s);
      // Keep |delta w| well inside the disk where the branch is univalent.
      double clearance = 1.0 - std::abs(piece.point(s));
      for (const Complex& v : loop.avoid) clearance = std::min(clearance, std::abs(piece.point(s) - v));
      const double speed = std::abs(piece.velocity(s));
      if (speed > 0.0) h = std::min(h, 0.25 * clearance / speed);
      const Complex target = piece.point(s + h);
      Complex next = z + piece.velocity(s) * h / b.derivative(z, tol);
      bool ok = false;
      int used = 0;
      double prev = 0.0;
      for (int it = 0; it < options.max_newton; ++it) {
        ++used;
        const Complex delta = (b.evaluate(next, tol) - target) / b.derivative(next, tol);
        next -= delta;
        const double size = std::abs(delta);
        if (it > 0 && size > 0.5 * prev) break;
        prev = size;
        if (std::abs(b.evaluate(next, tol) - target) <= options.newton_tol) {
          ok = true;
          break;
        }
      }
      if (!ok || !(std::abs(next) < 1.0)) {
        h *= 0.5;
        if (h < options.min_step) {
          throw Error(ErrorCode::kTrackingFailure, "continuation step underflow");
        }
        continue;
      }
      z = next;
      s += h;
      if (used <= 2) h = std::min(nominal, 1.5 * h);
    }
  }
  return z;
}

std::vector<Complex> branch_labels(const BlaschkeProduct& b) {
  std::vector<Complex> labels = b.zeros();
  std::sort(labels.begin(), labels.end(), label_less);
  return labels;
}

Permutation loop_permutation(const BlaschkeProduct& b, std::span<const Complex> labels,
                             const LoopSpec& loop, const TrackingOptions& options,
                             const ToleranceConfig& tol) {
  double sep = 2.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      sep = std::min(sep, std::abs(labels[i] - labels[j]));
    }
  }
  std::vector<int> images;
  for (const Complex& start : labels) {
    const Complex end = continue_branch(b, loop, start, options, tol);
    if (std::abs(b.evaluate(end, tol)) > 1e-10) {
      throw Error(ErrorCode::kNonBijective, "continuation did not return to the fiber");
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < labels.size(); ++j) {
      if (std::abs(labels[j] - end) < std::abs(labels[best] - end)) best = j;
    }
    if (std::abs(labels[best] - end) > sep / 10.0) {
      throw Error(ErrorCode::kNonBijective, "continuation ended away from every branch");
    }
    images.push_back(static_cast<int>(best));
  }
  return Permutation(std::move(images));
}

MonodromyResult monodromy_group(const BlaschkeProduct& b, const TrackingOptions& options,
                                const ToleranceConfig& tol) {
  const bool simple =
      cluster_points(b.zeros(), tol.cluster_tol).size() == b.zeros().size();
  const BlaschkeProduct product = simple ? b : normalize(b, tol).product;
  std::vector<Complex> values;
  for (const RootCluster& v : critical_data(product, tol).distinct_values) {
    values.push_back(v.value);
  }
  std::sort(values.begin(), values.end(), label_less);
  std::vector<LoopSpec> loops = build_loops(values, tol);
  const std::vector<Complex> labels = branch_labels(product);
  std::vector<Permutation> gens;
  for (const LoopSpec& loop : loops) {
    gens.push_back(loop_permutation(product, labels, loop, options, tol));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(product.degree()));
  PermutationGroup group(gens);
  return MonodromyResult{product, !simple, labels, values, std::move(loops),
                         std::move(gens), std::move(group)};
}

CrossValidation cross_validate(const BlaschkeProduct& b, const MonodromyResult& m,
                               const ToleranceConfig& tol) {
  CrossValidation out;
  out.agree = true;
  const std::vector<BlockSystem> systems = block_systems(m.group);
  const int n = b.degree();
  for (int k = 2; k < n; ++k) {
    if (n % k != 0) continue;
    bool has = false;
    for (const auto& s : systems) has = has || s.block_size() == k;
    bool found = false;
    if (k == 2) found = inner_degree2(b, tol).has_value();
    if (!found) found = inner_factor_general(b, k, tol).status == SearchStatus::kFound;
    out.inner_degrees.push_back(k);
    out.has_block_system.push_back(has);
    out.factor_found.push_back(found);
    if (has != found) out.agree = false;
  }
  return out;
}

}  // namespace blaschke
