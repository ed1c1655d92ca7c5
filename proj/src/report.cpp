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

#include "blaschke/report.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "blaschke/circle.hpp"
#include "blaschke/critical.hpp"
#include "blaschke/error.hpp"
#include "blaschke/monodromy.hpp"
#include "blaschke/permutation.hpp"

namespace blaschke {
namespace {

constexpr double kPi = 3.14159265358979323846;

Json clusters_json(const std::vector<RootCluster>& clusters) {
  Json out = Json::array();
  for (const auto& c : clusters) {
    out.push_back(Json{{"value", complex_json(c.value)}, {"multiplicity", c.multiplicity}});
  }
  return out;
}

Json degrees_json(const std::vector<int>& d) {
  Json out = Json::array();
  for (int v : d) out.push_back(v);
  return out;
}

Json fit_json(const ConicFit& fit) {
  Json out{{"kind", conic_kind_name(fit.kind)},
           {"max_residual", fit.max_residual},
           {"diameter", fit.diameter}};
  if (fit.kind == ConicKind::kEllipse) {
    out["center"] = complex_json(fit.center);
    out["semi_major"] = fit.semi_major;
    out["semi_minor"] = fit.semi_minor;
    out["angle"] = fit.angle;
    out["foci"] = Json::array({complex_json(fit.foci[0]), complex_json(fit.foci[1])});
  } else if (fit.kind == ConicKind::kPoint) {
    out["center"] = complex_json(fit.center);
  }
  Json coeffs = Json::array();
  for (double c : fit.coeffs) coeffs.push_back(c);
  out["coefficients"] = coeffs;
  return out;
}

Json header(const std::string& command, const ProductInput& in) {
  Json out{{"command", command}, {"degree", in.product.degree()}};
  out["product"] = product_json(in.product);
  if (in.chain) out["factors"] = chain_json(*in.chain)["factors"];
  return out;
}

std::string svg_number(double x) {
  double r = std::round(x * 1e6) / 1e6;
  if (r == 0.0) r = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

std::string svg_point(Complex z) { return svg_number(z.real()) + "," + svg_number(-z.imag()); }

std::string polyline(const std::vector<Complex>& pts, bool closed) {
  std::string d;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    d += (k == 0 ? "M" : " L") + svg_point(pts[k]);
  }
  if (closed) d += " Z";
  return d;
}

Json analyze(const ProductInput& in, const CommandOptions& opt) {
  const BlaschkeProduct& b = in.product;
  Json out = header("analyze", in);
  Json critical = Json::object();
  if (b.degree() >= 2) {
    const CriticalData data = critical_data(b, opt.tol);
    critical["points"] = complex_list_json(data.points);
    critical["values"] = complex_list_json(data.values);
    critical["distinct_values"] = clusters_json(data.distinct_values);
  } else {
    critical["points"] = Json::array();
    critical["values"] = Json::array();
    critical["distinct_values"] = Json::array();
  }
  out["critical"] = critical;
  ValueBound bound;
  if (in.chain) {
    bound = check_value_bound(*in.chain, opt.tol);
  } else {
    bound.distinct_values = static_cast<int>(critical["distinct_values"].size());
    bound.bound = b.degree() - 1;
    bound.satisfied = bound.distinct_values <= bound.bound;
  }
  out["value_bound"] = Json{{"distinct_values", bound.distinct_values},
                            {"bound", bound.bound},
                            {"satisfied", bound.satisfied}};
  const RegularizedCheck reg = is_regularized(b, opt.tol);
  Json witnesses = Json::array();
  for (const auto& [u, v] : reg.violations) {
    witnesses.push_back(Json::array({complex_json(u), complex_json(v)}));
  }
  out["regularized"] = Json{{"regularized", reg.regularized},
                            {"vanishes_at_zero", reg.vanishes_at_zero},
                            {"simple_zeros", reg.simple_zeros},
                            {"violations", witnesses}};
  if (b.degree() >= 2) {
    const auto form = one_critical_value_form(b, opt.tol);
    if (form) {
      out["single_critical_value"] =
          Json{{"a", complex_json(form->a)},
               {"outer_rotation", complex_json(form->tau.rotation())},
               {"outer_center", complex_json(form->tau.center())},
               {"error", form->error}};
    } else {
      out["single_critical_value"] = nullptr;
    }
  }
  return out;
}

std::vector<Artifact> curve(const ProductInput& in, const CommandOptions& opt) {
  const int skip = opt.skip.value_or(0);
  const EnvelopeCurve c = envelope(in.product, skip, opt.lambda_samples, opt.tol);
  const ConicFit fit = fit_conic(c.points(), opt.tol);
  Json out = header("curve", in);
  out["skip"] = skip;
  out["samples"] = opt.lambda_samples;
  out["fit"] = fit_json(fit);
  out["poncelet_order"] = poncelet_order(in.product, skip, std::polar(1.0, 0.1), opt.tol);
  const std::string stem = "curve_skip" + std::to_string(skip);
  out["files"] = Json::array({stem + ".csv", stem + ".svg"});
  return {{"report.json", dump_json(out)},
          {stem + ".csv", curve_csv(c)},
          {stem + ".svg", curve_svg(in.product, c, fit, opt.tol)}};
}

std::vector<Artifact> package(const ProductInput& in, const CommandOptions& opt) {
  const PonceletPackage pkg = poncelet_package(in.product, opt.lambda_samples, opt.tol);
  Json out = header("package", in);
  out["samples"] = opt.lambda_samples;
  std::vector<Artifact> files;
  Json curves = Json::array();
  Json names = Json::array();
  for (const auto& pc : pkg.curves) {
    const std::string stem = "package_skip" + std::to_string(pc.curve.skip);
    Json entry{{"skip", pc.curve.skip}, {"order", pc.order}, {"fit", fit_json(pc.fit)}};
    if (pc.fit.kind == ConicKind::kEllipse) {
      const FocusMatch m = foci_vs_zeros(pc.fit, in.product);
      entry["foci_vs_zeros"] =
          Json{{"zeros", Json::array({complex_json(m.zeros[0]), complex_json(m.zeros[1])})},
               {"distances", Json::array({m.distances[0], m.distances[1]})}};
    }
    curves.push_back(entry);
    files.push_back({stem + ".csv", curve_csv(pc.curve)});
    names.push_back(stem + ".csv");
    if (pc.fit.kind != ConicKind::kPoint) {
      files.push_back({stem + ".svg", curve_svg(in.product, pc.curve, pc.fit, opt.tol)});
      names.push_back(stem + ".svg");
    }
  }
  out["curves"] = curves;
  Json counts = Json::object();
  const std::vector<int> oc = order_counts(pkg);
  for (std::size_t d = 1; d < oc.size(); ++d) {
    if (oc[d] > 0) counts[std::to_string(d)] = oc[d];
  }
  out["order_counts"] = counts;
  out["files"] = names;
  files.insert(files.begin(), {"report.json", dump_json(out)});
  return files;
}

std::vector<Artifact> nrange(const ProductInput& in, const CommandOptions& opt) {
  const std::vector<Complex> zeros = range_zeros(in.product);
  if (zeros.empty()) {
    throw Error(ErrorCode::kDegenerateInput, "the compressed shift has dimension 0");
  }
  const Eigen::MatrixXcd a = shift_matrix(zeros);
  const RangeVerdict v = is_elliptical_range(a, opt.lambda_samples, opt.tol);
  Json out = header("nrange", in);
  out["matrix_zeros"] = complex_list_json(zeros);
  out["samples"] = opt.lambda_samples;
  out["elliptical"] = v.elliptical;
  out["support_mismatch"] = v.support_mismatch;
  out["fit"] = fit_json(v.fit);
  out["files"] = Json::array({"nrange.csv"});
  return {{"report.json", dump_json(out)}, {"nrange.csv", range_csv(v.sample)}};
}

Json decompose(const ProductInput& in, const CommandOptions& opt, DecompositionReport* keep) {
  DecompositionReport r = decompose_report(in.product, opt.tol);
  Json out = header("decompose", in);
  Json attempts = Json::array();
  for (const auto& a : r.attempts) {
    attempts.push_back(Json{{"degrees", degrees_json(a.degrees)},
                            {"status", search_status_name(a.status)},
                            {"error", a.error},
                            {"detail", a.detail}});
  }
  out["attempts"] = attempts;
  Json chains = Json::array();
  for (std::size_t k = 0; k < r.chains.size(); ++k) {
    if (r.errors[k] > 1e-8) {
      throw Error(ErrorCode::kVerificationFailure, "a reported chain does not reproduce B");
    }
    Json c = chain_json(r.chains[k]);
    c["degrees"] = degrees_json(r.chains[k].factor_degrees());
    c["error"] = r.errors[k];
    chains.push_back(c);
  }
  out["chains"] = chains;
  out["decomposable"] = !r.chains.empty();
  if (keep) *keep = std::move(r);
  return out;
}

Json blocks_json(const BlockSystem& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) {
    Json one = Json::array();
    for (int x : b) one.push_back(x + 1);
    blocks.push_back(one);
  }
  return Json{{"block_size", s.block_size()}, {"blocks", blocks}};
}

Json monodromy(const ProductInput& in, const CommandOptions& opt) {
  const MonodromyResult m = monodromy_group(in.product, {}, opt.tol);
  Json out = header("monodromy", in);
  out["normalized"] = m.normalized;
  if (m.normalized) out["normalized_product"] = product_json(m.product);
  out["labels"] = complex_list_json(m.labels);
  out["critical_values"] = complex_list_json(m.critical_values);
  Json gens = Json::array();
  for (const auto& g : m.generators) {
    Json images = Json::array();
    for (int x : g.images()) images.push_back(x + 1);
    gens.push_back(Json{{"images", images}, {"cycles", g.cycle_string()}});
  }
  out["generators"] = gens;
  const std::uint64_t order = m.group.order();
  out["order"] = order == 0 ? Json(nullptr) : Json(order);
  out["closure_complete"] = m.group.closure_complete();
  out["transitive"] = m.group.is_transitive();
  out["abelian"] = m.group.is_abelian();
  if (!m.group.is_transitive()) {
    throw Error(ErrorCode::kVerificationFailure, "monodromy group is not transitive");
  }
  Json systems = Json::array();
  for (const auto& s : block_systems(m.group)) systems.push_back(blocks_json(s));
  out["block_systems"] = systems;
  const int n = m.product.degree();
  if (n >= 2 && std::has_single_bit(static_cast<unsigned>(n))) {
    const int levels = std::countr_zero(static_cast<unsigned>(n));
    const WreathAudit w = wreath_audit(m.group, levels);
    out["wreath_audit"] = Json{{"levels", w.levels},
                               {"order", w.order},
                               {"expected_order", w.expected_order},
                               {"order_matches", w.order_matches},
                               {"two_group", w.two_group},
                               {"nested_blocks", w.nested_blocks},
                               {"nested_sizes", degrees_json(w.nested_sizes)},
                               {"pattern_conjugate", w.pattern_conjugate},
                               {"passed", w.passed}};
  } else {
    out["wreath_audit"] = nullptr;
  }
  const CrossValidation cv = cross_validate(m.product, m, opt.tol);
  Json rows = Json::array();
  for (std::size_t k = 0; k < cv.inner_degrees.size(); ++k) {
    rows.push_back(Json{{"inner_degree", cv.inner_degrees[k]},
                        {"block_system", static_cast<bool>(cv.has_block_system[k])},
                        {"inner_factor", static_cast<bool>(cv.factor_found[k])}});
  }
  out["cross_validation"] = Json{{"rows", rows}, {"agree", cv.agree}};
  return out;
}

Json invariants(const ProductInput& in, const CommandOptions& opt) {
  const BlaschkeProduct& b = in.product;
  const InvariantGroup g = invariant_group(b, opt.tol);
  Json out = header("invariants", in);
  out["order"] = g.order;
  out["cyclic"] = g.cyclic;
  Json errs = Json::array();
  for (double e : g.identity_errors) errs.push_back(e);
  out["identity_errors"] = errs;
  // Report the generator as a rotation when it is one.
  std::optional<Complex> rotation;
  for (int s = 0; s < 16; ++s) {
    const Complex z = std::polar(1.0, 2.0 * kPi * (s + 0.5) / 16.0);
    const Complex r = next_preimage(b, z, opt.tol) / z;
    if (!rotation) {
      rotation = r;
    } else if (std::abs(r - *rotation) > opt.tol.identity_tol) {
      rotation.reset();
      break;
    }
  }
  out["generator_rotation"] = rotation ? complex_json(*rotation) : Json(nullptr);
  if (!g.cyclic) {
    throw Error(ErrorCode::kVerificationFailure,
                "next-preimage map does not generate a cyclic group of order deg B");
  }
  if (in.chain) {
    bool quadratic = true;
    for (const auto& f : in.chain->factors()) quadratic = quadratic && f.degree() == 2;
    const auto& inner = in.chain->factors().back().zeros();
    if (quadratic && (inner[0] == 0.0 || inner[1] == 0.0)) {
      const GeneratorPowerCheck c = verify_generator_power(*in.chain, opt.tol);
      out["generator_power"] = Json{{"a", complex_json(c.a)},
                                    {"power", c.power},
                                    {"error", c.error},
                                    {"holds", c.holds}};
      if (!c.holds) {
        throw Error(ErrorCode::kVerificationFailure,
                    "generator power does not match the inner involution");
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"analyze",   "curve",     "package",
                                              "nrange",    "decompose", "monodromy",
                                              "invariants", "demo"};
  return names;
}

std::vector<Artifact> run_command(const std::string& command, const ProductInput& input,
                                  const CommandOptions& options) {
  options.tol.validate();
  if (options.lambda_samples < 8) {
    throw Error(ErrorCode::kInvalidInput, "at least 8 lambda samples are required");
  }
  if (command == "analyze") return {{"report.json", dump_json(analyze(input, options))}};
  if (command == "curve") return curve(input, options);
  if (command == "package") return package(input, options);
  if (command == "nrange") return nrange(input, options);
  if (command == "decompose") {
    DecompositionReport r;
    const Json j = decompose(input, options, &r);
    return {{"report.json", dump_json(j)}, {"table.txt", decomposition_table(r)}};
  }
  if (command == "monodromy") return {{"report.json", dump_json(monodromy(input, options))}};
  if (command == "invariants") return {{"report.json", dump_json(invariants(input, options))}};
  if (command == "demo") return {{"report.json", dump_json(input_json(input))}};
  throw Error(ErrorCode::kInvalidInput, "unknown command '" + command + "'");
}

std::string curve_csv(const EnvelopeCurve& curve) {
  std::string out = "t,re,im\n";
  for (const auto& s : curve.samples) {
    out += format_number(s.tau) + "," + format_number(s.point.real()) + "," +
           format_number(s.point.imag()) + "\n";
  }
  return out;
}

std::string range_csv(const NumericalRangeSample& sample) {
  std::string out = "theta,h,re,im\n";
  for (std::size_t k = 0; k < sample.angles.size(); ++k) {
    out += format_number(sample.angles[k]) + "," + format_number(sample.support[k]) + "," +
           format_number(sample.points[k].real()) + "," + format_number(sample.points[k].imag()) +
           "\n";
  }
  return out;
}

std::string curve_svg(const BlaschkeProduct& bhat, const EnvelopeCurve& curve,
                      const ConicFit& fit, const ToleranceConfig& tol) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" "
       "width=\"600\" height=\"600\">\n";
  s << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
       "stroke-width=\"0.006\"/>\n";
  const char* colors[3] = {"#1f77b4", "#2ca02c", "#9467bd"};
  for (int j = 0; j < 3; ++j) {
    const Complex lambda = std::polar(1.0, 2.0 * kPi * (j + 0.25) / 3.0);
    std::string d;
    for (const ChordLine& side : polygon_sides(bhat, lambda, curve.skip, tol)) {
      d += (d.empty() ? "M" : " M") + svg_point(side.p) + " L" + svg_point(side.q);
    }
    s << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << colors[j]
      << "\" stroke-width=\"0.004\"/>\n";
  }
  s << "<path d=\"" << polyline(curve.points(), true)
    << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"0.008\"/>\n";
  if (fit.kind == ConicKind::kEllipse) {
    std::vector<Complex> pts;
    const Complex axis = std::polar(1.0, fit.angle);
    for (int k = 0; k < 360; ++k) {
      const double t = 2.0 * kPi * k / 360.0;
      pts.push_back(fit.center +
                    axis * Complex(fit.semi_major * std::cos(t), fit.semi_minor * std::sin(t)));
    }
    s << "<path d=\"" << polyline(pts, true)
      << "\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"0.004\" "
         "stroke-dasharray=\"0.02 0.02\"/>\n";
  } else if (fit.kind == ConicKind::kPoint) {
    s << "<circle cx=\"" << svg_number(fit.center.real()) << "\" cy=\""
      << svg_number(-fit.center.imag()) << "\" r=\"0.015\" fill=\"#ff7f0e\"/>\n";
  }
  char residual[32];
  std::snprintf(residual, sizeof residual, "%.3g", fit.max_residual);
  s << "<text x=\"-1.05\" y=\"-1.02\" font-size=\"0.06\" font-family=\"sans-serif\">"
    << "skip " << curve.skip << ": " << conic_kind_name(fit.kind) << " (residual "
    << residual << ")</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::string decomposition_table(const DecompositionReport& report) {
  std::ostringstream s;
  s << "degree " << report.degree << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-16s %-12s %s\n", "shape", "status", "error",
                "detail");
  s << line;
  for (const auto& a : report.attempts) {
    std::string shape;
    for (std::size_t k = 0; k < a.degrees.size(); ++k) {
      shape += (k ? "x" : "") + std::to_string(a.degrees[k]);
    }
    char err[32];
    std::snprintf(err, sizeof err, "%.3g", a.error);
    std::snprintf(line, sizeof line, "%-14s %-16s %-12s %s\n", shape.c_str(),
                  search_status_name(a.status), a.status == SearchStatus::kFound ? err : "-",
                  a.detail.c_str());
    s << line;
  }
  return s.str();
}

}  // namespace blaschke
