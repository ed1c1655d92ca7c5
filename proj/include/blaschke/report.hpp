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


#ifndef BLASCHKE_REPORT_HPP_
#define BLASCHKE_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "blaschke/decompose.hpp"
#include "blaschke/io.hpp"
#include "blaschke/poncelet.hpp"
#include "blaschke/shiftop.hpp"

namespace blaschke {

// A named output file; the first artifact of every command is report.json.
struct Artifact {
  std::string name;
  std::string content;
};

struct CommandOptions {
  ToleranceConfig tol;
  int lambda_samples = 720;  // curve parameter samples, or support angles for nrange
  std::optional<int> skip;   // curve: defaults to 0
};

const std::vector<std::string>& command_names();

// Runs analyze, curve, package, nrange, decompose, monodromy, invariants or
// demo. Failures surface as blaschke::Error; exit-code mapping is left to
// the caller.
std::vector<Artifact> run_command(const std::string& command, const ProductInput& input,
                                  const CommandOptions& options);

std::string curve_csv(const EnvelopeCurve& curve);
std::string range_csv(const NumericalRangeSample& sample);
// Unit circle, three inscribed polygons, the envelope and the fitted conic.
std::string curve_svg(const BlaschkeProduct& bhat, const EnvelopeCurve& curve,
                      const ConicFit& fit, const ToleranceConfig& tol = {});
std::string decomposition_table(const DecompositionReport& report);

}  // namespace blaschke

#endif  // BLASCHKE_REPORT_HPP_
