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

#include "dupinv/matrix.hpp"

#include <numeric>

#include "dupinv/error.hpp"

namespace dupinv {

namespace {

CycNum mul_sparse(const CycNum& x, const CycNum& y) {
  if (x.is_zero() || y.is_zero()) return CycNum(0L).promote(common_conductor(x.conductor(), y.conductor()));
  return x * y;
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {mul_sparse(x.a11, y.a11) + mul_sparse(x.a12, y.a21),
          mul_sparse(x.a11, y.a12) + mul_sparse(x.a12, y.a22),
          mul_sparse(x.a21, y.a11) + mul_sparse(x.a22, y.a21),
          mul_sparse(x.a21, y.a12) + mul_sparse(x.a22, y.a22)};
}

Mat2 Mat2::inverse() const {
  const CycNum d = det();
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  const CycNum r = d.inverse();
  return {a22 * r, -a12 * r, -a21 * r, a11 * r};
}

Mat2 Mat2::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Mat2 result = identity().promote(conductor());
  Mat2 base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Mat2::is_identity() const {
  return a11.is_one() && a22.is_one() && a12.is_zero() && a21.is_zero();
}

std::uint64_t Mat2::conductor() const {
  return common_conductor(common_conductor(a11.conductor(), a12.conductor()),
                          common_conductor(a21.conductor(), a22.conductor()));
}

Mat2 Mat2::promote(std::uint64_t n) const {
  return {a11.promote(n), a12.promote(n), a21.promote(n), a22.promote(n)};
}

namespace {

// Roots of unity print as a single power of the primitive root.
std::string entry_string(const CycNum& x) {
  if (x.conductor() > 2) {
    if (const auto r = root_of_unity_log(x); r && r->order > 2) {
      std::string s = "zeta(" + std::to_string(r->order) + ")";
      if (r->power != 1) s += "^" + std::to_string(r->power);
      return s;
    }
  }
  return x.to_string();
}

}  // namespace

std::string Mat2::to_string() const {
  return "[[" + entry_string(a11) + "," + entry_string(a12) + "],[" + entry_string(a21) + "," +
         entry_string(a22) + "]]";
}

std::size_t Mat2::raw_hash() const {
  std::size_t seed = a11.raw_hash();
  hash_combine(seed, a12.raw_hash());
  hash_combine(seed, a21.raw_hash());
  hash_combine(seed, a22.raw_hash());
  return seed;
}

Mat2 mat_diag(const CycNum& a, const CycNum& b) { return {a, 0L, 0L, b}; }
Mat2 mat_s() { return {0L, 1L, 1L, 0L}; }
Mat2 mat_s1() { return {0L, 1L, -1L, 0L}; }
Mat2 mat_s2() { return {0L, -1L, 1L, 0L}; }
Mat2 mat_d1() { return mat_diag(-1L, 1L); }
Mat2 mat_d2() { return mat_diag(1L, -1L); }
Mat2 mat_c(const CycNum& eps) { return mat_diag(eps, eps.inverse()); }
Mat2 mat_c_minus(const CycNum& eps) { return mat_diag(-eps, eps.inverse()); }

MatN::MatN(std::size_t n, std::vector<CycNum> entries) : n_(n), e_(std::move(entries)) {
  if (e_.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix entry count mismatch");
}

MatN MatN::identity(std::size_t n) {
  MatN m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1L;
  return m;
}

MatN MatN::diag(const std::vector<CycNum>& d) {
  MatN m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool MatN::is_monomial() const {
  std::vector<int> col_count(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j).is_zero()) continue;
      ++row_count;
      ++col_count[j];
    }
    if (row_count != 1) return false;
  }
  for (int c : col_count) {
    if (c != 1) return false;
  }
  return true;
}

bool MatN::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::uint64_t MatN::conductor() const {
  std::uint64_t c = 1;
  for (const CycNum& x : e_) c = common_conductor(c, x.conductor());
  return c;
}

MatN MatN::promote(std::uint64_t m) const {
  MatN out = *this;
  for (CycNum& x : out.e_) x = x.promote(m);
  return out;
}

std::size_t MatN::raw_hash() const {
  std::size_t seed = n_;
  for (const CycNum& x : e_) hash_combine(seed, x.raw_hash());
  return seed;
}

MatN operator*(const MatN& x, const MatN& y) {
  if (x.n_ != y.n_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  const std::size_t n = x.n_;
  const std::uint64_t c = common_conductor(x.conductor(), y.conductor());
  MatN out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CycNum acc = CycNum(0L).promote(c);
      for (std::size_t k = 0; k < n; ++k) {
        if (x.at(i, k).is_zero() || y.at(k, j).is_zero()) continue;
        acc += x.at(i, k) * y.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

}  // namespace dupinv
