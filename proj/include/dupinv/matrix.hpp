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
#include <string>
#include <vector>

#include "dupinv/cyclotomic.hpp"

namespace dupinv {

struct Mat2 {
  CycNum a11, a12, a21, a22;

  static Mat2 identity() { return {1L, 0L, 0L, 1L}; }

  CycNum det() const { return a11 * a22 - a12 * a21; }
  CycNum trace() const { return a11 + a22; }
  // Throws Error(DivisionByZero) when singular.
  Mat2 inverse() const;
  Mat2 pow(std::int64_t e) const;

  bool is_identity() const;
  bool is_diagonal() const { return a12.is_zero() && a21.is_zero(); }
  bool is_antidiagonal() const { return a11.is_zero() && a22.is_zero(); }

  std::uint64_t conductor() const;
  Mat2 promote(std::uint64_t n) const;

  // "[[e11,e12],[e21,e22]]"
  std::string to_string() const;
  std::size_t raw_hash() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }
};

Mat2 mat_diag(const CycNum& a, const CycNum& b);
Mat2 mat_s();   // [[0,1],[1,0]]
Mat2 mat_s1();  // [[0,1],[-1,0]]
Mat2 mat_s2();  // [[0,-1],[1,0]]
Mat2 mat_d1();  // diag(-1, 1)
Mat2 mat_d2();  // diag(1, -1)
Mat2 mat_c(const CycNum& eps);        // diag(eps, eps^-1)
Mat2 mat_c_minus(const CycNum& eps);  // diag(-eps, eps^-1)

// Square matrix of any size, row major. Used for polynomial rings in more
// than two variables.
class MatN {
 public:
  MatN() = default;
  explicit MatN(std::size_t n) : n_(n), e_(n * n) {}
  MatN(std::size_t n, std::vector<CycNum> entries);
  static MatN identity(std::size_t n);
  static MatN diag(const std::vector<CycNum>& d);

  std::size_t size() const { return n_; }
  const CycNum& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  CycNum& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

  // One nonzero entry in each row and column.
  bool is_monomial() const;
  bool is_identity() const;
  std::uint64_t conductor() const;
  MatN promote(std::uint64_t m) const;
  std::size_t raw_hash() const;

  friend MatN operator*(const MatN& x, const MatN& y);
  friend bool operator==(const MatN& x, const MatN& y) { return x.n_ == y.n_ && x.e_ == y.e_; }

 private:
  std::size_t n_ = 0;
  std::vector<CycNum> e_;
};

}  // namespace dupinv
