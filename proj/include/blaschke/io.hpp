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


#ifndef BLASCHKE_IO_HPP_
#define BLASCHKE_IO_HPP_

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "blaschke/product.hpp"

namespace blaschke {

// Keys keep insertion order so reports read top-down.
using Json = nlohmann::ordered_json;

// A product read from JSON. Chain input keeps the factors; the product is
// their expansion.
struct ProductInput {
  BlaschkeProduct product;
  std::optional<CompositionChain> chain;
};

// Accepts {"gamma":[re,im],"zeros":[[re,im],...]} (gamma defaults to 1) or
// {"factors":[product, ...]} with the innermost factor last. Throws
// Error(kInvalidInput) with a diagnostic for malformed text or values.
ProductInput parse_input(const std::string& text);
ProductInput read_input_file(const std::string& path);

Json complex_json(Complex z);
Json complex_list_json(std::span<const Complex> zs);
Json product_json(const BlaschkeProduct& b);
Json chain_json(const CompositionChain& chain);
Json input_json(const ProductInput& in);

// %.17g for finite values, null otherwise.
std::string format_number(double x);
// Pretty printer writing every floating value through format_number.
std::string dump_json(const Json& j);

}  // namespace blaschke

#endif  // BLASCHKE_IO_HPP_
