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
#include <string_view>
#include <vector>

#include "dupinv/error.hpp"
#include "dupinv/matrix.hpp"

namespace dupinv {

// Error(ParseError) with the offending offset and the tokens that would have
// been accepted there.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t position, std::vector<std::string> expected, std::string_view input);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' signed-int)?
//   atom   := rational | 'zeta(' uint ')' | 'i' | '(' expr ')' | '-' atom
// 'i' is zeta(4). Whitespace is ignored.
CycNum parse_cyc_expr(std::string_view text);

// "[[e11,e12],[e21,e22]]"
Mat2 parse_matrix(std::string_view text);

inline std::string render_matrix(const Mat2& m) { return m.to_string(); }

}  // namespace dupinv
