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

#include <string>
#include <vector>

#include "json.hpp"

#include "dupinv/checks.hpp"
#include "dupinv/group.hpp"
#include "dupinv/invariants.hpp"

namespace dupinv {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json poly_to_json(const IntPoly& p);
nlohmann::json label_to_json(const GroupLabel& label, const MatGroup& h);
nlohmann::json report_to_json(const Theorem03Report& r);
std::string report_to_markdown(const Theorem03Report& r);

nlohmann::json checks_to_json(const std::string& suite, std::uint64_t max_n, const std::vector<CheckResult>& results);
std::string checks_to_markdown(const std::vector<CheckResult>& results);

}  // namespace dupinv
