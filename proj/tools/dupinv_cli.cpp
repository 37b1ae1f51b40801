// Copyright 2026 The dupinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dupinv/checks.hpp"
#include "dupinv/expr_parser.hpp"
#include "dupinv/invariants.hpp"
#include "dupinv/report.hpp"

namespace {

using namespace dupinv;

constexpr int kExitFailure = 1;
constexpr int kExitNotAutomorphism = 2;
constexpr int kExitClosure = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAnAutomorphism: return kExitNotAutomorphism;
    case ErrorCode::GroupTooLarge:
    case ErrorCode::SingularGenerator:
    case ErrorCode::InfiniteOrderSuspected: return kExitClosure;
    default: return kExitFailure;
  }
}

std::vector<Mat2> parse_generators(const std::vector<std::string>& texts) {
  std::vector<Mat2> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_matrix(t));
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite group actions on down-up algebras"};
  app.require_subcommand(1);

  std::string alpha = "1", beta = "1";
  std::vector<std::string> gens;
  bool as_md = false;
  auto* analyze = app.add_subcommand("analyze", "Fixed ring report for a group acting on A(alpha, beta)");
  analyze->add_option("--alpha", alpha, "alpha as p/q")->required();
  analyze->add_option("--beta", beta, "beta as p/q, nonzero")->required();
  analyze->add_option("--gen", gens, "generator [[a,b],[c,d]], repeatable")->required()->allow_extra_args(false);
  auto* json_flag = analyze->add_flag("--json", "JSON output (default)");
  analyze->add_flag("--md", as_md, "markdown table")->excludes(json_flag);

  std::string suite = "all";
  std::uint64_t max_n = 8;
  bool lab_md = false;
  auto* lab = app.add_subcommand("paperlab", "Run the reproduction checks");
  lab->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  lab->add_option("--max-n", max_n, "largest group parameter")->check(CLI::Range(1, 200));
  lab->add_flag("--md", lab_md, "markdown table");

  std::vector<std::string> class_gens;
  auto* cls = app.add_subcommand("classify", "Label the group generated by the matrices");
  cls->add_option("--gen", class_gens, "generator [[a,b],[c,d]], repeatable")->required()->allow_extra_args(false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const Rat a = parse_rat(alpha);
      const Rat b = parse_rat(beta);
      const Theorem03Report r = theorem03_report(a, b, parse_generators(gens));
      if (as_md) {
        std::cout << report_to_markdown(r);
      } else {
        std::cout << report_to_json(r).dump(2) << "\n";
      }
      return 0;
    }
    if (lab->parsed()) {
      const auto results = run_suite(suite, max_n);
      const auto doc = checks_to_json(suite, max_n, results);
      if (lab_md) {
        std::cout << checks_to_markdown(results);
      } else {
        std::cout << doc.dump(2) << "\n";
      }
      return doc["passed"].get<bool>() ? 0 : kExitFailure;
    }
    if (cls->parsed()) {
      const MatGroup h = close_group(parse_generators(class_gens));
      const GroupLabel label = classify(h);
      nlohmann::json dets = nlohmann::json::array();
      for (const CycNum& d : det_values(h)) dets.push_back(d.to_string());
      const nlohmann::json doc = {{"schema_version", kSchemaVersion},
                                  {"group", label_to_json(label, h)},
                                  {"det_values", dets},
                                  {"sl2_order", sl2_part(h).order()},
                                  {"det_onto_signs", det_maps_onto_signs(h)}};
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "dupinv: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}
