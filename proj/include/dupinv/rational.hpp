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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace dupinv {

// Arbitrary precision integers and canonical rationals (GMP keeps mpq_class
// reduced with a positive denominator after every arithmetic operation).
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" with optional sign. Throws Error(ParseError) on
// malformed input and Error(DivisionByZero) on a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rat& value);

std::size_t hash_value(const Int& value);
std::size_t hash_value(const Rat& value);

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace dupinv
