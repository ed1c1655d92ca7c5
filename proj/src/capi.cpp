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

#include "blaschke/blaschke.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "blaschke/demos.hpp"
#include "blaschke/error.hpp"
#include "blaschke/io.hpp"
#include "blaschke/report.hpp"

struct bl_product {
  blaschke::ProductInput input;
};

struct bl_options {
  blaschke::CommandOptions command;
};

struct bl_report {
  std::vector<blaschke::Artifact> artifacts;
};

namespace {

thread_local std::string last_error;

bl_status status_of(blaschke::ErrorCode code) {
  using blaschke::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidInput: return BL_INVALID_INPUT;
    case ErrorCode::kPoleProximity: return BL_POLE_PROXIMITY;
    case ErrorCode::kSolverFailure: return BL_SOLVER_FAILURE;
    case ErrorCode::kDegenerateInput: return BL_DEGENERATE_INPUT;
    case ErrorCode::kNoInteriorFixedPoint: return BL_NO_INTERIOR_FIXED_POINT;
    case ErrorCode::kCountMismatch: return BL_COUNT_MISMATCH;
    case ErrorCode::kVerificationFailure: return BL_VERIFICATION_FAILURE;
    case ErrorCode::kEigensolverFailure: return BL_EIGENSOLVER_FAILURE;
    case ErrorCode::kDegenerateEnvelope: return BL_DEGENERATE_ENVELOPE;
    case ErrorCode::kTrackingFailure: return BL_TRACKING_FAILURE;
    case ErrorCode::kNonBijective: return BL_NON_BIJECTIVE;
    case ErrorCode::kGeometryFailure: return BL_GEOMETRY_FAILURE;
  }
  return BL_INTERNAL_ERROR;
}

template <typename F>
bl_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return BL_OK;
  } catch (const blaschke::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return BL_INTERNAL_ERROR;
}

bl_status invalid(const char* message) {
  last_error = message;
  return BL_INVALID_INPUT;
}

bl_status run(const char* command, const bl_product* product, const bl_options* options,
              bl_report** out) {
  if (command == nullptr || product == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  *out = nullptr;
  const blaschke::CommandOptions defaults;
  const blaschke::CommandOptions& opt = options ? options->command : defaults;
  return guarded([&] {
    auto report = std::make_unique<bl_report>();
    report->artifacts = blaschke::run_command(command, product->input, opt);
    *out = report.release();
  });
}

bl_status make_product(blaschke::ProductInput input, bl_product** out) {
  *out = new bl_product{std::move(input)};
  return BL_OK;
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "1.0.0"; }

const char* bl_status_name(bl_status status) {
  switch (status) {
    case BL_OK: return "ok";
    case BL_INVALID_INPUT: return "invalid_input";
    case BL_POLE_PROXIMITY: return "pole_proximity";
    case BL_SOLVER_FAILURE: return "solver_failure";
    case BL_DEGENERATE_INPUT: return "degenerate_input";
    case BL_NO_INTERIOR_FIXED_POINT: return "no_interior_fixed_point";
    case BL_COUNT_MISMATCH: return "count_mismatch";
    case BL_VERIFICATION_FAILURE: return "verification_failure";
    case BL_EIGENSOLVER_FAILURE: return "eigensolver_failure";
    case BL_DEGENERATE_ENVELOPE: return "degenerate_envelope";
    case BL_TRACKING_FAILURE: return "tracking_failure";
    case BL_NON_BIJECTIVE: return "non_bijective";
    case BL_GEOMETRY_FAILURE: return "geometry_failure";
    case BL_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

int bl_status_exit_code(bl_status status) {
  switch (status) {
    case BL_OK: return 0;
    case BL_INVALID_INPUT:
    case BL_DEGENERATE_INPUT:
    case BL_POLE_PROXIMITY: return 2;
    case BL_VERIFICATION_FAILURE:
    case BL_COUNT_MISMATCH: return 4;
    default: return 3;
  }
}

const char* bl_last_error(void) { return last_error.c_str(); }

bl_options* bl_options_new(void) { return new (std::nothrow) bl_options{}; }

void bl_options_free(bl_options* options) { delete options; }

bl_status bl_options_set(bl_options* options, const char* key, double value) {
  if (options == nullptr || key == nullptr) return invalid("null argument");
  if (!std::isfinite(value)) return invalid("option values must be finite");
  const std::string k = key;
  auto& c = options->command;
  auto as_int = [&](int& slot) {
    if (value != std::floor(value) || std::abs(value) > 1e9) {
      return invalid("option expects an integer");
    }
    slot = static_cast<int>(value);
    return BL_OK;
  };
  if (k == "root_tol") {
    c.tol.root_tol = value;
  } else if (k == "cluster_tol") {
    c.tol.cluster_tol = value;
  } else if (k == "identity_tol") {
    c.tol.identity_tol = value;
  } else if (k == "conic_residual_tol") {
    c.tol.conic_residual_tol = value;
  } else if (k == "circle_samples") {
    return as_int(c.tol.circle_samples);
  } else if (k == "lambda_samples") {
    return as_int(c.lambda_samples);
  } else if (k == "skip") {
    int s = 0;
    const bl_status st = as_int(s);
    if (st == BL_OK) c.skip = s;
    return st;
  } else {
    last_error = "unknown option '" + k + "'";
    return BL_INVALID_INPUT;
  }
  return BL_OK;
}

bl_status bl_product_from_json(const char* json, bl_product** out) {
  if (json == nullptr || out == nullptr) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { make_product(blaschke::parse_input(json), out); });
}

bl_status bl_product_from_demo(const char* name, bl_product** out) {
  if (name == nullptr || out == nullptr) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    blaschke::DemoProduct d = blaschke::demo_product(name);
    make_product({std::move(d.product), std::move(d.chain)}, out);
  });
}

bl_status bl_product_from_zeros(double gamma_re, double gamma_im, const double* zeros,
                                size_t n, bl_product** out) {
  if (out == nullptr || (zeros == nullptr && n > 0)) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<blaschke::Complex> z;
    for (size_t k = 0; k < n; ++k) z.emplace_back(zeros[2 * k], zeros[2 * k + 1]);
    make_product({blaschke::BlaschkeProduct({gamma_re, gamma_im}, std::move(z)), std::nullopt},
                 out);
  });
}

void bl_product_free(bl_product* product) { delete product; }

size_t bl_product_degree(const bl_product* product) {
  return product ? static_cast<size_t>(product->input.product.degree()) : 0;
}

bl_status bl_product_zero(const bl_product* product, size_t index, double* re, double* im) {
  if (product == nullptr || re == nullptr || im == nullptr) return invalid("null argument");
  const auto& zeros = product->input.product.zeros();
  if (index >= zeros.size()) return invalid("zero index out of range");
  *re = zeros[index].real();
  *im = zeros[index].imag();
  return BL_OK;
}

bl_status bl_product_evaluate(const bl_product* product, double re, double im, double* out_re,
                              double* out_im) {
  if (product == nullptr || out_re == nullptr || out_im == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    const blaschke::Complex w = product->input.product.evaluate({re, im});
    *out_re = w.real();
    *out_im = w.imag();
  });
}

bl_status bl_product_derivative(const bl_product* product, double re, double im,
                                double* out_re, double* out_im) {
  if (product == nullptr || out_re == nullptr || out_im == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    const blaschke::Complex w = product->input.product.derivative({re, im});
    *out_re = w.real();
    *out_im = w.imag();
  });
}

size_t bl_demo_count(void) { return blaschke::demo_names().size(); }

const char* bl_demo_name(size_t index) {
  const auto& names = blaschke::demo_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

bl_status bl_run(const char* command, const bl_product* product, const bl_options* options,
                 bl_report** out) {
  return run(command, product, options, out);
}

bl_status bl_analyze(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("analyze", p, o, out);
}
bl_status bl_curve(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("curve", p, o, out);
}
bl_status bl_package(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("package", p, o, out);
}
bl_status bl_nrange(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("nrange", p, o, out);
}
bl_status bl_decompose(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("decompose", p, o, out);
}
bl_status bl_monodromy(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("monodromy", p, o, out);
}
bl_status bl_invariants(const bl_product* p, const bl_options* o, bl_report** out) {
  return run("invariants", p, o, out);
}

size_t bl_report_count(const bl_report* report) {
  return report ? report->artifacts.size() : 0;
}

const char* bl_report_name(const bl_report* report, size_t index) {
  if (report == nullptr || index >= report->artifacts.size()) return nullptr;
  return report->artifacts[index].name.c_str();
}

const char* bl_report_content(const bl_report* report, size_t index) {
  if (report == nullptr || index >= report->artifacts.size()) return nullptr;
  return report->artifacts[index].content.c_str();
}

void bl_report_free(bl_report* report) { delete report; }

}  // extern "C"
