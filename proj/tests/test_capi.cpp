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

#include <doctest.h>

#include <cmath>
#include <string>

#include "blaschke/blaschke.h"

TEST_CASE("C API product handles") {
  bl_product* p = nullptr;
  const double zeros[] = {0.0, 0.0, 0.5, 0.0};
  REQUIRE(bl_product_from_zeros(1.0, 0.0, zeros, 2, &p) == BL_OK);
  CHECK(bl_product_degree(p) == 2);
  double re = 0.0, im = 0.0;
  CHECK(bl_product_zero(p, 1, &re, &im) == BL_OK);
  CHECK(re == 0.5);
  CHECK(bl_product_zero(p, 2, &re, &im) == BL_INVALID_INPUT);
  double wr = 0.0, wi = 0.0;
  CHECK(bl_product_evaluate(p, 0.0, 1.0, &wr, &wi) == BL_OK);
  CHECK(std::abs(std::hypot(wr, wi) - 1.0) < 1e-12);
  CHECK(bl_product_derivative(p, 0.0, 0.0, &wr, &wi) == BL_OK);
  CHECK(std::abs(wr - (-0.5)) < 1e-12);
  CHECK(bl_product_evaluate(p, 2.0, 0.0, &wr, &wi) == BL_POLE_PROXIMITY);
  bl_product_free(p);

  const double outside[] = {1.5, 0.0};
  CHECK(bl_product_from_zeros(1.0, 0.0, outside, 1, &p) == BL_INVALID_INPUT);
  CHECK(p == nullptr);
  CHECK(std::string(bl_last_error()).size() > 0);
  CHECK(bl_product_from_json("{not json", &p) == BL_INVALID_INPUT);
  CHECK(bl_product_from_demo("nope", &p) == BL_INVALID_INPUT);
  CHECK(bl_product_from_zeros(1.0, 0.0, nullptr, 1, &p) == BL_INVALID_INPUT);
}

TEST_CASE("C API commands and reports") {
  REQUIRE(bl_demo_count() == 7);
  CHECK(std::string(bl_demo_name(0)) == "power2");
  CHECK(bl_demo_name(99) == nullptr);

  bl_product* p = nullptr;
  REQUIRE(bl_product_from_demo("elliptical8", &p) == BL_OK);
  bl_options* o = bl_options_new();
  CHECK(bl_options_set(o, "lambda_samples", 90) == BL_OK);
  CHECK(bl_options_set(o, "skip", 1) == BL_OK);
  CHECK(bl_options_set(o, "skip", 1.5) == BL_INVALID_INPUT);
  CHECK(bl_options_set(o, "bogus", 1) == BL_INVALID_INPUT);

  bl_report* r = nullptr;
  REQUIRE(bl_curve(p, o, &r) == BL_OK);
  REQUIRE(bl_report_count(r) == 3);
  CHECK(std::string(bl_report_name(r, 0)) == "report.json");
  CHECK(std::string(bl_report_name(r, 1)) == "curve_skip1.csv");
  CHECK(std::string(bl_report_content(r, 0)).find("\"ellipse\"") != std::string::npos);
  CHECK(bl_report_name(r, 3) == nullptr);
  bl_report_free(r);

  for (auto fn : {bl_analyze, bl_package, bl_nrange, bl_decompose, bl_monodromy, bl_invariants}) {
    r = nullptr;
    CHECK(fn(p, o, &r) == BL_OK);
    CHECK(bl_report_count(r) >= 1);
    bl_report_free(r);
  }
  CHECK(bl_run("demo", p, nullptr, &r) == BL_OK);
  bl_report_free(r);
  CHECK(bl_run("nothing", p, o, &r) == BL_INVALID_INPUT);
  CHECK(r == nullptr);

  CHECK(bl_options_set(o, "lambda_samples", 0) == BL_OK);
  CHECK(bl_curve(p, o, &r) == BL_INVALID_INPUT);
  CHECK(bl_options_set(o, "cluster_tol", 1e-20) == BL_OK);
  CHECK(bl_options_set(o, "lambda_samples", 90) == BL_OK);
  CHECK(bl_analyze(p, o, &r) == BL_INVALID_INPUT);
  bl_options_free(o);
  bl_product_free(p);
}

TEST_CASE("C API status mapping") {
  CHECK(bl_status_exit_code(BL_OK) == 0);
  CHECK(bl_status_exit_code(BL_INVALID_INPUT) == 2);
  CHECK(bl_status_exit_code(BL_DEGENERATE_INPUT) == 2);
  CHECK(bl_status_exit_code(BL_SOLVER_FAILURE) == 3);
  CHECK(bl_status_exit_code(BL_TRACKING_FAILURE) == 3);
  CHECK(bl_status_exit_code(BL_VERIFICATION_FAILURE) == 4);
  CHECK(std::string(bl_status_name(BL_GEOMETRY_FAILURE)) == "geometry_failure");
  CHECK(std::string(bl_version()) == "1.0.0");
}
