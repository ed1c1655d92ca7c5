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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blaschke/blaschke.h"

namespace {

struct Handles {
  bl_product* product = nullptr;
  bl_options* options = nullptr;
  bl_report* report = nullptr;
  ~Handles() {
    bl_report_free(report);
    bl_options_free(options);
    bl_product_free(product);
  }
};

int fail(bl_status status, const std::string& context) {
  std::cerr << "blaschke: " << context << ": " << bl_last_error() << " ["
            << bl_status_name(status) << "]\n";
  return bl_status_exit_code(status);
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool write_file(const std::filesystem::path& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Blaschke product toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bl_version());

  std::optional<std::string> input_path;
  std::optional<std::string> demo;
  std::optional<int> lambda_samples;
  std::optional<int> skip;
  std::optional<std::string> out_dir;
  std::optional<double> tol_root, tol_cluster, tol_identity, tol_conic;
  std::optional<int> circle_samples;
  bool table = false;

  const char* commands[][2] = {
      {"analyze", "Zeros, critical data and normal-form checks"},
      {"curve", "Envelope of one diagonal family with its conic fit (CSV + SVG)"},
      {"package", "All diagonal envelopes with fits and closure orders"},
      {"nrange", "Numerical range of the compressed shift"},
      {"decompose", "Search for compositional factors"},
      {"monodromy", "Monodromy group, block systems and wreath audit"},
      {"invariants", "Group of invariants generated by the next-preimage map"},
      {"demo", "List demo products, or print one with --demo"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    auto* in = sub->add_option("--input", input_path, "Product or chain JSON file");
    auto* dm = sub->add_option("--demo", demo, "Demo product name");
    in->excludes(dm);
    sub->add_option("--lambda-samples", lambda_samples, "Curve or support-angle samples");
    sub->add_option("--skip", skip, "Diagonal index for curve");
    sub->add_option("--out", out_dir, "Directory for written artifacts");
    sub->add_option("--tol-root", tol_root);
    sub->add_option("--tol-cluster", tol_cluster);
    sub->add_option("--tol-identity", tol_identity);
    sub->add_option("--tol-conic", tol_conic);
    sub->add_option("--circle-samples", circle_samples);
    if (std::string(c[0]) == "decompose") {
      sub->add_flag("--table", table, "Print a table instead of JSON");
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command;
  for (CLI::App* s : subs) {
    if (s->parsed()) command = s->get_name();
  }

  if (command == "demo" && !demo && !input_path) {
    for (size_t k = 0; k < bl_demo_count(); ++k) std::cout << bl_demo_name(k) << "\n";
    return 0;
  }
  if (!demo && !input_path) {
    std::cerr << "blaschke: one of --input or --demo is required\n";
    return 2;
  }

  Handles h;
  bl_status st;
  if (demo) {
    st = bl_product_from_demo(demo->c_str(), &h.product);
    if (st != BL_OK) return fail(st, "demo " + *demo);
  } else {
    std::string text;
    if (!read_file(*input_path, text)) {
      std::cerr << "blaschke: cannot read '" << *input_path << "'\n";
      return 2;
    }
    st = bl_product_from_json(text.c_str(), &h.product);
    if (st != BL_OK) return fail(st, *input_path);
  }

  h.options = bl_options_new();
  const std::pair<const char*, std::optional<double>> settings[] = {
      {"root_tol", tol_root},
      {"cluster_tol", tol_cluster},
      {"identity_tol", tol_identity},
      {"conic_residual_tol", tol_conic},
      {"circle_samples", circle_samples ? std::optional<double>(*circle_samples) : std::nullopt},
      {"lambda_samples", lambda_samples ? std::optional<double>(*lambda_samples) : std::nullopt},
      {"skip", skip ? std::optional<double>(*skip) : std::nullopt},
  };
  for (const auto& [key, value] : settings) {
    if (!value) continue;
    st = bl_options_set(h.options, key, *value);
    if (st != BL_OK) return fail(st, std::string("option ") + key);
  }

  st = bl_run(command.c_str(), h.product, h.options, &h.report);
  if (st != BL_OK) return fail(st, command);

  const size_t count = bl_report_count(h.report);
  std::string primary = bl_report_content(h.report, 0);
  if (table) {
    for (size_t k = 0; k < count; ++k) {
      if (std::string(bl_report_name(h.report, k)) == "table.txt") {
        primary = bl_report_content(h.report, k);
      }
    }
  }
  std::cout << primary;

  // File artifacts go to --out; curve and package default to the working
  // directory since they have nothing else to show.
  std::optional<std::filesystem::path> dir;
  if (out_dir) {
    dir = *out_dir;
  } else if (command == "curve" || command == "package") {
    dir = ".";
  }
  if (dir) {
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    for (size_t k = 0; k < count; ++k) {
      const std::string name = bl_report_name(h.report, k);
      if (!out_dir && name == "report.json") continue;
      if (!write_file(*dir / name, bl_report_content(h.report, k))) {
        std::cerr << "blaschke: cannot write " << (*dir / name).string() << "\n";
        return 2;
      }
    }
  }
  return 0;
}
