/*
Copyright 2026 The eulercw Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// eulercw: command-line front end over the C API.
//
// Machine-readable output (JSON, or DOT for export-dual) goes to stdout or
// the -o file; a one-line human summary goes to stderr. Exit status is 0 on
// success, 1 when an analysis precondition or check fails, 2 on bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulercw/eulercw.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct ComplexDeleter {
  void operator()(ecw_complex* c) const { ecw_complex_free(c); }
};
using ComplexPtr = std::unique_ptr<ecw_complex, ComplexDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ecw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code(ecw_status status) {
  switch (status) {
    case ECW_OK: return kExitOk;
    case ECW_CHECK_FAILED: return kExitFailed;
    default: return kExitInput;
  }
}

int report_error(ecw_status status) {
  Json j{{"error", ecw_last_error_name()}, {"message", ecw_last_error_message()}};
  std::cout << j.dump(2) << "\n";
  std::cerr << "error: " << ecw_last_error_name() << ": " << ecw_last_error_message() << "\n";
  return exit_code(status);
}

int input_error(const std::string& name, const std::string& message) {
  Json j{{"error", name}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  std::cerr << "error: " << name << ": " << message << "\n";
  return kExitInput;
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

class Runner {
 public:
  int load(const std::string& path, ComplexPtr& out) {
    std::string text;
    if (!read_file(path, text)) return input_error("ParseError", "cannot read '" + path + "'");
    ecw_complex* raw = nullptr;
    const ecw_status status = ecw_complex_parse(text.c_str(), &raw);
    if (status != ECW_OK) return report_error(status);
    out.reset(raw);
    return kExitOk;
  }

  // Writes a produced document; `status` may be ECW_CHECK_FAILED for reports.
  int finish(ecw_status status, char* raw, const std::string& output,
             void (*summarize)(const Json&)) {
    OwnedString text(raw);
    if (!text) return report_error(status);
    if (!write_output(output, text.get())) {
      return input_error("IOError", "cannot write '" + output + "'");
    }
    if (summarize && text.get()[0] == '{') summarize(Json::parse(text.get()));
    return exit_code(status);
  }
};

void summarize_report(const Json& j) {
  std::cerr << j.at("scope").get<std::string>() << ": "
            << (j.at("passed").get<bool>() ? "passed" : "FAILED") << " ("
            << j.at("violations").size() << " violations)\n";
}

void summarize_analysis(const Json& j) {
  std::cerr << "dimension " << j.at("dimension") << ", cells per dimension "
            << j.at("cell_counts").dump() << ", pure " << j.at("is_pure") << ", even "
            << j.at("is_even") << ", strong components " << j.at("strong_components")
            << ", euler characteristic " << j.at("euler_characteristic") << "\n";
}

void summarize_decomposition(const Json& j) {
  std::cerr << j.at("parts").size() << " circlets, sizes";
  for (const Json& part : j.at("parts")) std::cerr << " " << part.size();
  std::cerr << "\n";
}

void summarize_cover(const Json& j) {
  std::vector<std::size_t> counts(j.at("source").at("dimension").get<std::size_t>() + 1, 0);
  for (const Json& c : j.at("source").at("cells")) ++counts.at(c.at("dim").get<std::size_t>());
  std::cerr << "cover source cells per dimension " << Json(counts).dump()
            << ", euler characteristic " << j.at("source_euler_characteristic") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler covers and circlet decompositions of regular CW-complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ecw_version());

  std::string input;
  std::string output;
  std::string complex_path;
  std::string strategy = "canonical";
  std::uint64_t seed = 0;
  std::string family;
  std::vector<long long> params;

  auto* validate = app.add_subcommand("validate", "check regularity (necessary conditions)");
  validate->add_option("input", input, "complex JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "dimension, degrees, evenness, components");
  analyze->add_option("input", input, "complex JSON file")->required();

  auto* decompose = app.add_subcommand("decompose", "facet-disjoint circlet decomposition");
  decompose->add_option("input", input, "complex JSON file")->required();
  decompose->add_option("-o,--output", output, "output file");

  auto* cover = app.add_subcommand("cover", "construct an Euler cover");
  cover->add_option("input", input, "complex JSON file")->required();
  cover->add_option("--strategy", strategy, "gluing strategy")
      ->check(CLI::IsMember({"canonical", "seeded"}));
  cover->add_option("--seed", seed, "seed for the seeded strategy");
  cover->add_option("-o,--output", output, "output file");

  auto* verify = app.add_subcommand("verify", "verify a cover file, or a decomposition file");
  verify->add_option("input", input, "cover or decomposition JSON file")->required();
  verify->add_option("--complex", complex_path, "complex the decomposition refers to");

  auto* tour = app.add_subcommand("tour", "cyclic side tour of a pseudomanifold");
  tour->add_option("input", input, "complex JSON file")->required();

  auto* generate = app.add_subcommand("generate", "emit a fixture complex");
  generate->add_option("family", family, "family name")->required();
  generate->add_option("params", params, "integer parameters");
  generate->add_option("-o,--output", output, "output file");

  auto* export_dual = app.add_subcommand("export-dual", "dual multigraph as Graphviz DOT");
  export_dual->add_option("input", input, "complex JSON file")->required();
  export_dual->add_option("-o,--output", output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Runner run;
  ComplexPtr complex;
  char* text = nullptr;

  if (generate->parsed()) {
    ecw_complex* raw = nullptr;
    ecw_status status = ecw_complex_generate(family.c_str(), params.data(), params.size(), &raw);
    if (status != ECW_OK) return report_error(status);
    complex.reset(raw);
    status = ecw_complex_to_json(complex.get(), &text);
    if (status == ECW_OK) {
      std::cerr << family << ": dimension " << ecw_complex_dimension(complex.get()) << ", cells";
      for (int r = 0; r <= ecw_complex_dimension(complex.get()); ++r) {
        std::cerr << " " << ecw_complex_cell_count(complex.get(), r);
      }
      std::cerr << "\n";
    }
    return run.finish(status, text, output, nullptr);
  }

  if (verify->parsed()) {
    std::string doc;
    if (!read_file(input, doc)) return input_error("ParseError", "cannot read '" + input + "'");
    bool is_decomposition = false;
    try {
      const Json j = Json::parse(doc);
      is_decomposition = j.is_object() && j.contains("parts");
    } catch (const Json::exception&) {
      // ecw_verify_cover reports the parse error.
    }
    if (is_decomposition) {
      if (complex_path.empty()) {
        return input_error("ParseError", "verifying a decomposition needs --complex");
      }
      if (int rc = run.load(complex_path, complex); rc != kExitOk) return rc;
      const ecw_status status = ecw_verify_decomposition(complex.get(), doc.c_str(), &text);
      return run.finish(status, text, "", summarize_report);
    }
    const ecw_status status = ecw_verify_cover(doc.c_str(), &text);
    return run.finish(status, text, "", summarize_report);
  }

  if (int rc = run.load(input, complex); rc != kExitOk) return rc;

  if (validate->parsed()) {
    const ecw_status status = ecw_validate(complex.get(), &text);
    return run.finish(status, text, "", summarize_report);
  }
  if (analyze->parsed()) {
    const ecw_status status = ecw_analyze(complex.get(), &text);
    return run.finish(status, text, "", summarize_analysis);
  }
  if (decompose->parsed()) {
    const ecw_status status = ecw_decompose(complex.get(), &text);
    return run.finish(status, text, output, summarize_decomposition);
  }
  if (cover->parsed()) {
    const ecw_strategy s = strategy == "seeded" ? ECW_STRATEGY_SEEDED : ECW_STRATEGY_CANONICAL;
    const ecw_status status = ecw_cover(complex.get(), s, seed, &text);
    return run.finish(status, text, output, summarize_cover);
  }
  if (tour->parsed()) {
    const ecw_status status = ecw_side_tour(complex.get(), &text);
    if (status == ECW_OK) std::cerr << "side tour computed\n";
    return run.finish(status, text, "", nullptr);
  }
  if (export_dual->parsed()) {
    const ecw_status status = ecw_export_dual(complex.get(), &text);
    return run.finish(status, text, output, nullptr);
  }
  return kExitInput;
}
