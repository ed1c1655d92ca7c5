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

#include "blaschke/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

using json = Json;

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::kInvalidInput, where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

BlaschkeProduct parse_product(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidInput, where + ": expected an object");
  Complex gamma = 1.0;
  if (j.contains("gamma")) gamma = parse_complex(j.at("gamma"), where + ".gamma");
  if (!j.contains("zeros") || !j.at("zeros").is_array()) {
    throw Error(ErrorCode::kInvalidInput, where + ": missing \"zeros\" array");
  }
  std::vector<Complex> zeros;
  const json& list = j.at("zeros");
  for (std::size_t k = 0; k < list.size(); ++k) {
    zeros.push_back(parse_complex(list[k], where + ".zeros[" + std::to_string(k) + "]"));
  }
  try {
    return BlaschkeProduct(gamma, std::move(zeros));
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

void write_json(std::ostringstream& out, const json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << json(it.key()).dump() << ": ";
        write_json(out, it.value(), depth + 1);
      }
      out << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Short arrays of scalars stay on one line, e.g. complex pairs.
      bool flat = j.size() <= 8;
      for (const auto& v : j) flat = flat && !v.is_structured();
      if (flat) {
        out << "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k > 0) out << ", ";
          write_json(out, j[k], depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k > 0) out << ",\n";
        out << pad;
        write_json(out, j[k], depth + 1);
      }
      out << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float:
      out << format_number(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

}  // namespace

ProductInput parse_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("factors")) {
    const json& list = j.at("factors");
    if (!list.is_array() || list.empty()) {
      throw Error(ErrorCode::kInvalidInput, "\"factors\" must be a non-empty array");
    }
    std::vector<BlaschkeProduct> factors;
    for (std::size_t k = 0; k < list.size(); ++k) {
      factors.push_back(parse_product(list[k], "factors[" + std::to_string(k) + "]"));
    }
    CompositionChain chain(std::move(factors));
    BlaschkeProduct expanded = chain.expand();
    return {std::move(expanded), std::move(chain)};
  }
  return {parse_product(j, "input"), std::nullopt};
}

ProductInput read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list_json(std::span<const Complex> zs) {
  json out = json::array();
  for (const Complex& z : zs) out.push_back(complex_json(z));
  return out;
}

json product_json(const BlaschkeProduct& b) {
  json out = json::object();
  out["gamma"] = complex_json(b.gamma());
  out["zeros"] = complex_list_json(b.zeros());
  return out;
}

json chain_json(const CompositionChain& chain) {
  json factors = json::array();
  for (const auto& f : chain.factors()) factors.push_back(product_json(f));
  return json{{"factors", factors}};
}

json input_json(const ProductInput& in) {
  json out = product_json(in.product);
  if (in.chain) out["factors"] = chain_json(*in.chain)["factors"];
  return out;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const json& j) {
  std::ostringstream out;
  write_json(out, j, 0);
  out << "\n";
  return out.str();
}

}  // namespace blaschke
