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

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dupinv/cyclotomic.hpp"
#include "dupinv/poly.hpp"
#include "dupinv/ratfunc.hpp"

namespace dupinv {

// Flags compare as a vector so that a row of yes/no columns is one value.
using CheckValue = std::variant<RatFunc, IntPoly, CycNum, std::vector<bool>>;

struct CheckResult {
  std::string check_id;
  std::map<std::string, long long> parameters;
  CheckValue expected;
  CheckValue computed;
  bool passed = false;
  std::string note;
};

CheckResult make_check(std::string id, std::map<std::string, long long> params, CheckValue expected,
                       CheckValue computed, std::string note = {});

std::string render_value(const CheckValue& v);

// Closed form families used throughout.
IntPoly lemma86_family1(std::uint64_t n);  // (1 + t^n + t^2n)(1 + t^4) + 2 t^(n+2)
IntPoly lemma86_family2(std::uint64_t n);  // (1 + t^2n)(1 + t^4) + 4 t^(n+2)

CheckResult check_example82(std::uint64_t n, const Rat& alpha = 1, const Rat& beta = 1);
// Series, S1 and S2 identities.
std::vector<CheckResult> check_example83(std::uint64_t n);
// Series; cyclotomic iff n = 1; alternative closed form at n = 1.
std::vector<CheckResult> check_lemma84(std::uint64_t n);
// Series; numerator non-cyclotomic; bireflection subgroup of index 2.
std::vector<CheckResult> check_lemma87(std::uint64_t n);
std::vector<CheckResult> sweep_lemma86(std::uint64_t max_n);
// Numerator t^2n + t^(n+2) + t^n + 1 for odd n, and its non-cyclotomicity.
std::vector<CheckResult> check_three_variable(std::uint64_t n);
std::vector<CheckResult> check_case21();
std::vector<CheckResult> check_example59(std::uint64_t v, std::uint64_t w);
std::vector<CheckResult> reproduce_table4(std::uint64_t max_n);
std::vector<CheckResult> check_table2_hdet(std::uint64_t max_n = 6);

// Names accepted by run_suite: all, example82, example83, lemma84, lemma86,
// lemma87, threevar, case21, example59, table2, table4.
std::vector<std::string> suite_names();
// Throws InvalidArgument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t max_n);

}  // namespace dupinv
