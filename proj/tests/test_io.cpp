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
#include <limits>

#include "blaschke/demos.hpp"
#include "blaschke/error.hpp"
#include "blaschke/io.hpp"
#include "blaschke/report.hpp"

using namespace blaschke;

TEST_CASE("product JSON round trip") {
  const BlaschkeProduct b(std::polar(1.0, 0.3), {Complex(0.1, 0.2), -0.45, Complex(0.0, 1.0 / 3.0)});
  const std::string text = dump_json(product_json(b));
  const ProductInput back = parse_input(text);
  CHECK_FALSE(back.chain.has_value());
  REQUIRE(back.product.degree() == 3);
  CHECK(back.product.gamma() == b.gamma());
  for (int k = 0; k < 3; ++k) CHECK(back.product.zeros()[k] == b.zeros()[k]);
}

TEST_CASE("chain input expands with the innermost factor last") {
  const ProductInput in = parse_input(
      R"({"factors": [{"zeros": [[0, 0], [0.5, 0]]}, {"gamma": [1, 0], "zeros": [[0, 0], [0, 0]]}]})");
  REQUIRE(in.chain.has_value());
  CHECK(in.product.degree() == 4);
  const Complex z = std::polar(1.0, 0.7);
  const Complex w = z * z;
  CHECK(std::abs(in.product(z) - w * (w - 0.5) / (1.0 - 0.5 * w)) < 1e-12);
}

TEST_CASE("malformed input is an input error") {
  for (const char* text : {"{", "[]", R"({"zeros": 3})", R"({"zeros": [[0.5]]})",
                           R"({"zeros": [[1.5, 0]]})", R"({"gamma": [2, 0], "zeros": [[0, 0]]})",
                           R"({"factors": []})"}) {
    try {
      (void)parse_input(text);
      FAIL("accepted " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidInput);
    }
  }
  CHECK_THROWS_AS(read_input_file("/nonexistent/product.json"), Error);
}

TEST_CASE("numbers carry 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "null");
  CHECK(format_number(std::nan("")) == "null");
  Json j{{"x", 1.0 / 3.0}, {"bad", std::numeric_limits<double>::infinity()}, {"n", 3}};
  const std::string text = dump_json(j);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"bad\": null") != std::string::npos);
  CHECK(text.find("\"n\": 3") != std::string::npos);
  CHECK(Json::parse(text)["x"].get<double>() == 1.0 / 3.0);
}

TEST_CASE("commands are deterministic") {
  const DemoProduct d = demo_product("elliptical8");
  const ProductInput in{d.product, d.chain};
  CommandOptions opt;
  opt.lambda_samples = 120;
  for (const std::string& c : command_names()) {
    const auto first = run_command(c, in, opt);
    const auto second = run_command(c, in, opt);
    REQUIRE(first.size() == second.size());
    CHECK(first[0].name == "report.json");
    for (std::size_t k = 0; k < first.size(); ++k) {
      CHECK(first[k].name == second[k].name);
      CHECK(first[k].content == second[k].content);
    }
  }
  CHECK_THROWS_AS(run_command("bogus", in, opt), Error);
  opt.lambda_samples = 0;
  CHECK_THROWS_AS(run_command("curve", in, opt), Error);
}

TEST_CASE("curve artifacts") {
  const DemoProduct d = demo_product("nonexample84");
  CommandOptions opt;
  opt.lambda_samples = 90;
  const auto files = run_command("curve", {d.product, d.chain}, opt);
  REQUIRE(files.size() == 3);
  CHECK(files[1].name == "curve_skip0.csv");
  CHECK(files[1].content.rfind("t,re,im\n", 0) == 0);
  CHECK(files[2].content.find("viewBox=\"-1.1 -1.1 2.2 2.2\"") != std::string::npos);
  CHECK(files[2].content.find("non-conic") != std::string::npos);
  CHECK(Json::parse(files[0].content)["fit"]["kind"] == "non-conic");

  const auto pkg = run_command("package", {demo_product("elliptical8").product, std::nullopt}, opt);
  int svgs = 0;
  for (const auto& f : pkg) svgs += f.name.size() > 4 && f.name.ends_with(".svg") ? 1 : 0;
  CHECK(svgs == 3);

  const auto nr = run_command("nrange", {BlaschkeProduct::power(4), std::nullopt}, opt);
  CHECK(nr[1].content.rfind("theta,h,re,im\n", 0) == 0);
  CHECK(Json::parse(nr[0].content)["elliptical"] == true);
  CHECK_THROWS_AS(run_command("nrange", {BlaschkeProduct::power(1), std::nullopt}, opt), Error);
}

TEST_CASE("analyze and invariants reports") {
  CommandOptions opt;
  const auto a = Json::parse(
      run_command("analyze", {demo_product("nonexample84").product, std::nullopt}, opt)[0].content);
  CHECK(a["critical"]["points"].size() == 7);
  CHECK(a["value_bound"]["satisfied"] == true);
  const auto p8 = Json::parse(
      run_command("analyze", {demo_product("power8").product, std::nullopt}, opt)[0].content);
  CHECK(p8["critical"]["distinct_values"].size() == 1);
  const auto inv = Json::parse(
      run_command("invariants", {BlaschkeProduct::power(2), std::nullopt}, opt)[0].content);
  CHECK(inv["order"] == 2);
  CHECK(std::abs(inv["generator_rotation"][0].get<double>() + 1.0) < 1e-12);
  const auto dec = run_command("decompose", {demo_product("nonexample84").product, std::nullopt}, opt);
  CHECK(dec[1].content.find("2x2x2") != std::string::npos);
}
