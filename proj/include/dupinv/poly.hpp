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

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dupinv/rational.hpp"

namespace dupinv {

// Dense univariate polynomial over Z in the variable t, lowest degree first.
// The coefficient vector never ends in a zero; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t exponent);
  // 1 - c t^k
  static IntPoly one_minus(std::size_t k, long c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Int> coeffs() const { return coeffs_; }
  Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }
  // Exponent of the largest power of t dividing a nonzero polynomial.
  std::size_t low_degree() const;

  Int content() const;
  IntPoly primitive_part() const;
  // t^deg * p(1/t)
  IntPoly reversed() const;
  IntPoly shifted(std::size_t k) const;  // t^k * p
  IntPoly compose_power(std::size_t k) const;  // p(t^k)
  IntPoly negate_variable() const;  // p(-t)

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Int& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly pow(unsigned e) const;

  // "1 - 2*t^2 + t^4"
  std::string to_string() const;
  std::vector<long long> to_int64() const;  // throws when a coefficient does not fit

 private:
  void trim();

  std::vector<Int> coeffs_;
};

// Quotient a / b when b divides a in Z[t]; nullopt otherwise. b must be nonzero.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor over Q, returned primitive with positive leading
// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Phi_d. Computed once per d by dividing t^d - 1 by Phi_e for the proper
// divisors e of d; the cache is shared across threads.
const IntPoly& cyclotomic_poly(std::uint64_t d);

struct CycFactorization {
  // (d, multiplicity) ascending in d.
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  int unit = 1;

  IntPoly expand() const;
};

// Factorization p = unit * prod Phi_d^m when p has that shape, nullopt
// otherwise. Throws Error(ZeroPolynomial) on p = 0.
std::optional<CycFactorization> is_cyclotomic_product(const IntPoly& p);

}  // namespace dupinv
