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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dupinv/rational.hpp"

namespace dupinv {

inline constexpr std::uint64_t kMaxConductor = 1000000;

// Element of Q(zeta_n) in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1).
// Every value carries its own conductor n; binary operations promote both
// sides to the lcm conductor first.
class CycNum {
 public:
  CycNum() : conductor_(1), coeffs_(1) {}
  CycNum(const Rat& r) : conductor_(1), coeffs_{r} { coeffs_[0].canonicalize(); }  // NOLINT implicit
  CycNum(long v) : conductor_(1), coeffs_{Rat(v)} {}  // NOLINT implicit

  // Reduces sum coeffs[i] zeta_n^i modulo Phi_n. coeffs may be longer than
  // phi(n), but no longer than n.
  static CycNum make(std::uint64_t conductor, std::vector<Rat> coeffs);
  // zeta_n^k for any integer k.
  static CycNum zeta(std::uint64_t n, std::int64_t k = 1);

  std::uint64_t conductor() const { return conductor_; }
  std::span<const Rat> coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;
  std::optional<Rat> to_rational() const;

  // Same value written over conductor m; m must be a multiple of conductor().
  CycNum promote(std::uint64_t m) const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  // Throws Error(DivisionByZero) for zero.
  CycNum inverse() const;
  CycNum pow(std::int64_t e) const;

  std::complex<double> embed() const;
  // Expression syntax accepted by the matrix parser, e.g. "1/2 - zeta(8)^3".
  std::string to_string() const;
  // Hash of the stored coefficients; agrees with == only for equal conductors.
  std::size_t raw_hash() const;

 private:
  CycNum(std::uint64_t conductor, std::vector<Rat> coeffs, bool)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  std::uint64_t conductor_;
  std::vector<Rat> coeffs_;
};

CycNum cyc_make(std::uint64_t conductor, std::vector<Rat> coeffs);
inline CycNum cyc_add(const CycNum& x, const CycNum& y) { return x + y; }
inline CycNum cyc_mul(const CycNum& x, const CycNum& y) { return x * y; }
inline CycNum cyc_neg(const CycNum& x) { return -x; }
inline CycNum cyc_inv(const CycNum& x) { return x.inverse(); }

std::uint64_t common_conductor(std::uint64_t a, std::uint64_t b);

// x = zeta_m^k with gcd(k, m) = 1 and 0 <= k < m.
struct RootOfUnity {
  std::uint64_t order;
  std::uint64_t power;
};

// Least m with x^m = 1, or nullopt when x is not a root of unity.
std::optional<std::uint64_t> root_of_unity_order(const CycNum& x);
std::optional<RootOfUnity> root_of_unity_log(const CycNum& x);

}  // namespace dupinv
