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


#ifndef BLASCHKE_PONCELET_HPP_
#define BLASCHKE_PONCELET_HPP_

#include <array>
#include <span>
#include <vector>

#include "blaschke/circle.hpp"
#include "blaschke/conic.hpp"
#include "blaschke/product.hpp"

namespace blaschke {

// Line Re(conj(normal) z) = offset through two circle points. The normal
// bisects the counterclockwise arc from p to q.
struct ChordLine {
  Complex p;
  Complex q;
  Complex normal;
  double offset = 0.0;
};

ChordLine chord_line(double alpha, double beta);

struct EnvelopeSample {
  double tau = 0.0;  // curve parameter in [0, 2 pi)
  double lambda_angle = 0.0;
  Complex point;
  ChordLine chord;
};

struct EnvelopeCurve {
  int skip = 0;
  int degree = 0;
  std::vector<EnvelopeSample> samples;

  std::vector<Complex> points() const;
};

// Vertices of the inscribed polygon for lambda, by increasing angle.
CircleSolutionSet polygon_vertices(const BlaschkeProduct& bhat, Complex lambda,
                                   const ToleranceConfig& tol = {});

// Chords joining vertex k to vertex k + skip + 1 for `samples` values of
// the curve parameter. Throws Error(kInvalidInput) unless
// 0 <= skip <= deg/2 - 1 and samples >= 8; Error(kDegenerateEnvelope) if
// an envelope point cannot be formed.
EnvelopeCurve envelope(const BlaschkeProduct& bhat, int skip, int samples = 720,
                       const ToleranceConfig& tol = {});

// Sides k -> k + skip + 1 of the polygon for lambda.
std::vector<ChordLine> polygon_sides(const BlaschkeProduct& bhat, Complex lambda,
                                     int skip, const ToleranceConfig& tol = {});

// Max |h_E(normal) - offset| over the polygon sides for every lambda.
double tangency_audit(const ConicFit& ellipse, const BlaschkeProduct& bhat,
                      std::span<const Complex> lambdas, int skip,
                      const ToleranceConfig& tol = {});

// Circle or axis-aligned ellipse suggested by the horizontal and vertical
// sides of one polygon: semi_x and semi_y are their offsets.
struct AxisCandidate {
  double semi_x = 0.0;
  double semi_y = 0.0;
  std::vector<ChordLine> sides;
};

AxisCandidate axis_aligned_candidate(const BlaschkeProduct& bhat, Complex lambda,
                                     int skip, const ToleranceConfig& tol = {});

// Steps needed for the chord walk p -> vertex(index + skip + 1) to return to
// its start within 1e-8, or 0 if it does not within deg steps.
int poncelet_order(const BlaschkeProduct& bhat, int skip, Complex start,
                   const ToleranceConfig& tol = {});

// Poncelet walk on the circle using only the tangent lines to an ellipse.
std::vector<Complex> ellipse_walk(const ConicFit& ellipse, Complex start, int steps);

struct PonceletCurve {
  EnvelopeCurve curve;
  ConicFit fit;
  int order = 0;
};

struct PonceletPackage {
  int degree = 0;
  std::vector<PonceletCurve> curves;  // skip 0 .. deg/2 - 1
};

PonceletPackage poncelet_package(const BlaschkeProduct& bhat, int samples = 720,
                                 const ToleranceConfig& tol = {});

// Number of curves in the package with each order d (index d).
std::vector<int> order_counts(const PonceletPackage& package);

struct FocusMatch {
  std::array<Complex, 2> zeros{};
  std::array<double, 2> distances{};
};

// Pair of zeros of b (distinct indices, so a repeated zero can pair with
// its copy) closest to the foci of an ellipse fit.
FocusMatch foci_vs_zeros(const ConicFit& fit, const BlaschkeProduct& b);

}  // namespace blaschke

#endif  // BLASCHKE_PONCELET_HPP_
