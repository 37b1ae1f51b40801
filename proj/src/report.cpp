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

#include "dupinv/report.hpp"

#include <sstream>

namespace dupinv {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json value_to_json(const CheckValue& v) {
  struct Visitor {
    json operator()(const RatFunc& f) const { return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }
    json operator()(const IntPoly& p) const { return poly_to_json(p); }
    json operator()(const CycNum& x) const { return x.to_string(); }
    json operator()(const std::vector<bool>& flags) const { return flags; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

json poly_to_json(const IntPoly& p) {
  json out = json::array();
  for (const Int& c : p.coeffs()) out.push_back(int_to_json(c));
  return out;
}

json label_to_json(const GroupLabel& label, const MatGroup& h) {
  json gens = json::array();
  for (const Mat2& g : h.generators) gens.push_back(g.to_string());
  return {{"order", h.order()}, {"label", label.display()}, {"all_matches", label.all_matches}, {"generators", gens}};
}

json report_to_json(const Theorem03Report& r) {
  json cyc = {{"flag", r.cyclotomic}};
  if (r.cyclotomic_factors) {
    json factors = json::array();
    for (const auto& [d, m] : r.cyclotomic_factors->factors) factors.push_back({d, m});
    cyc["factors"] = factors;
  } else if (r.noncyclotomic_witness) {
    cyc["witness"] = poly_to_json(*r.noncyclotomic_witness);
  }
  return {
      {"schema_version", kSchemaVersion},
      {"algebra",
       {{"alpha", to_string(r.algebra.alpha)}, {"beta", to_string(r.algebra.beta)}, {"aut_shape", to_string(r.aut_shape)}}},
      {"group", label_to_json(r.group_label, r.group)},
      {"series", {{"num", poly_to_json(r.hilbert_series.num())}, {"den", poly_to_json(r.hilbert_series.den())}}},
      {"hdet_trivial", r.hdet_trivial},
      {"gorenstein",
       {{"by_hdet", r.gorenstein_by_hdet},
        {"by_stanley", r.gorenstein_by_stanley},
        {"as_index", r.as_index ? json(*r.as_index) : json(nullptr)}}},
      {"cyclotomic", cyc},
      {"bireflections", {{"count", r.bireflection_count}, {"generates", r.generated_by_bireflections}}},
      {"theorem03", {{"C2", r.C2}, {"C3", r.C3}, {"consistent", r.consistent}}},
  };
}

std::string report_to_markdown(const Theorem03Report& r) {
  std::ostringstream os;
  os << "| field | value |\n|---|---|\n";
  os << "| algebra | " << r.algebra.describe() << " |\n";
  os << "| automorphism shape | " << to_string(r.aut_shape) << " |\n";
  os << "| group | " << r.group_label.display() << ", order " << r.group.order() << " |\n";
  std::string matches;
  for (const auto& m : r.group_label.all_matches) matches += (matches.empty() ? "" : ", ") + m;
  os << "| matches | " << matches << " |\n";
  os << "| Hilbert series | " << r.hilbert_series.to_string() << " |\n";
  os << "| hdet trivial | " << yes_no(r.hdet_trivial) << " |\n";
  os << "| Gorenstein (hdet) | " << yes_no(r.gorenstein_by_hdet) << " |\n";
  os << "| Gorenstein (functional equation) | " << yes_no(r.gorenstein_by_stanley);
  if (r.as_index) os << ", l = " << *r.as_index;
  os << " |\n";
  os << "| cyclotomic | " << yes_no(r.cyclotomic);
  if (r.noncyclotomic_witness) os << ", witness " << r.noncyclotomic_witness->to_string();
  os << " |\n";
  os << "| bireflections | " << r.bireflection_count << ", generate: " << yes_no(r.generated_by_bireflections)
     << " |\n";
  os << "| C2 / C3 | " << yes_no(r.C2) << " / " << yes_no(r.C3) << " |\n";
  os << "| consistent | " << yes_no(r.consistent) << " |\n";
  return os.str();
}

json checks_to_json(const std::string& suite, std::uint64_t max_n, const std::vector<CheckResult>& results) {
  json items = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    json item = {{"check_id", r.check_id},
                 {"parameters", r.parameters},
                 {"passed", r.passed},
                 {"expected", value_to_json(r.expected)},
                 {"computed", value_to_json(r.computed)}};
    if (!r.note.empty()) item["note"] = r.note;
    items.push_back(std::move(item));
  }
  return {{"schema_version", kSchemaVersion},
          {"suite", suite},
          {"max_n", max_n},
          {"total", results.size()},
          {"failed", failed},
          {"passed", failed == 0},
          {"results", items}};
}

std::string checks_to_markdown(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "| check | parameters | result | computed |\n|---|---|---|---|\n";
  for (const auto& r : results) {
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
    os << "| " << r.check_id << " | " << params << " | " << (r.passed ? "pass" : "FAIL") << " | "
       << render_value(r.computed) << " |\n";
  }
  return os.str();
}

}  // namespace dupinv
