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

#include "dupinv/expr_parser.hpp"

#include <cctype>

namespace dupinv {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
  return s;
}

}  // namespace

ParseFailure::ParseFailure(std::size_t position, std::vector<std::string> expected, std::string_view input)
    : Error(ErrorCode::ParseError, "at position " + std::to_string(position) + " in '" + std::string(input) +
                                       "': expected " + join(expected)),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  CycNum whole_expr() {
    CycNum v = expr();
    skip();
    if (pos_ != s_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return v;
  }

  Mat2 whole_matrix() {
    expect('[');
    expect('[');
    CycNum a11 = expr();
    expect(',');
    CycNum a12 = expr();
    expect(']');
    expect(',');
    expect('[');
    CycNum a21 = expr();
    expect(',');
    CycNum a22 = expr();
    expect(']');
    expect(']');
    skip();
    if (pos_ != s_.size()) fail({"end of input"});
    return {a11, a12, a21, a22};
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) { throw ParseFailure(pos_, std::move(expected), s_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail({"digit"});
    return std::string(s_.substr(start, pos_ - start));
  }

  CycNum expr() {
    CycNum v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  CycNum term() {
    CycNum v = factor();
    while (accept('*')) v = v * factor();
    return v;
  }

  CycNum factor() {
    CycNum base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) {
      pos_ = at;
      fail({"exponent below 10^9"});
    }
    const std::int64_t e = std::stoll(d);
    return base.pow(negative ? -e : e);
  }

  CycNum atom() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      CycNum v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num(digits(), 10);
      if (!accept('/')) return CycNum(Rat(num));
      const std::size_t at = pos_;
      Int den(digits(), 10);
      if (den == 0) {
        pos_ = at;
        fail({"nonzero denominator"});
      }
      Rat r(num, den);
      r.canonicalize();
      return CycNum(r);
    }
    if (s_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      expect('(');
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 7 || std::stoull(d) == 0 || std::stoull(d) > kMaxConductor) {
        pos_ = at;
        fail({"conductor between 1 and " + std::to_string(kMaxConductor)});
      }
      const std::uint64_t n = std::stoull(d);
      expect(')');
      return CycNum::zeta(n);
    }
    if (c == 'i') {
      ++pos_;
      return CycNum::zeta(4);
    }
    fail({"rational", "'zeta('", "'i'", "'('", "'-'"});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_cyc_expr(std::string_view text) { return Parser(text).whole_expr(); }

Mat2 parse_matrix(std::string_view text) { return Parser(text).whole_matrix(); }

}  // namespace dupinv
