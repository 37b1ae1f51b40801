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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dupinv/poly.hpp"

namespace dupinv {

// num / den with gcd(num, den) = 1 over Q, den(0) > 0 and the joint content
// of num and den equal to 1. For a series with integer coefficients this
// forces den(0) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(IntPoly{1}) {}
  // Throws ZeroDenominator, DenominatorVanishesAtZero.
  RatFunc(IntPoly num, IntPoly den);
  static RatFunc from_poly(IntPoly p) { return RatFunc(std::move(p), IntPoly{1}); }
  // Skips the gcd; the caller guarantees num and den are coprime.
  static RatFunc from_coprime(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const Rat& c, const RatFunc& f);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize_units();

  IntPoly num_;
  IntPoly den_;
};

inline RatFunc ratfunc_make(IntPoly num, IntPoly den) { return RatFunc(std::move(num), std::move(den)); }

// Multiplicity of (1 - t) in den minus its multiplicity in num.
int pole_order_at_one(const RatFunc& f);

// Taylor coefficients of degrees 0..n.
std::vector<Rat> series_coeffs(const RatFunc& f, std::size_t n);

struct LaurentTerm {
  int exponent;
  Rat coefficient;
};
// Throws ZeroFunction.
LaurentTerm laurent_leading_at_infinity(const RatFunc& f);

struct StanleyData {
  int sign;
  int index;
};
// (sign, l) with f(1/t) = sign * t^l * f(t).
std::optional<StanleyData> stanley_gorenstein_test(const RatFunc& f);

// Product of (1 - c_i t^{d_i}).
IntPoly product_one_minus(const std::vector<std::pair<std::size_t, long>>& factors);

}  // namespace dupinv
