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

#include "dupinv/ratfunc.hpp"

#include "dupinv/error.hpp"

namespace dupinv {

RatFunc::RatFunc(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (den.coeff(0) == 0) {
    throw Error(ErrorCode::DenominatorVanishesAtZero, "denominator vanishes at t = 0");
  }
  if (num.is_zero()) {
    num_ = IntPoly{};
    den_ = IntPoly{1};
    return;
  }
  const IntPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  normalize_units();
}

RatFunc RatFunc::from_coprime(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (den.coeff(0) == 0) {
    throw Error(ErrorCode::DenominatorVanishesAtZero, "denominator vanishes at t = 0");
  }
  RatFunc f;
  if (num.is_zero()) return f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.normalize_units();
  return f;
}

void RatFunc::normalize_units() {
  Int g = gcd(num_.content(), den_.content());
  if (den_.coeff(0) < 0) g = -g;
  if (g != 1) {
    num_ = *divide_exact(num_, IntPoly::constant(g));
    den_ = *divide_exact(den_, IntPoly::constant(g));
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  IntPoly num = a.num_ * b.den_;
  IntPoly den = a.den_ * b.num_;
  const std::size_t k = std::min(num.low_degree(), den.low_degree());
  if (k > 0) {
    num = *divide_exact(num, IntPoly::monomial(1, k));
    den = *divide_exact(den, IntPoly::monomial(1, k));
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc operator*(const Rat& c, const RatFunc& f) {
  IntPoly num = f.num_ * Int(c.get_num());
  IntPoly den = f.den_ * Int(c.get_den());
  RatFunc out;
  if (num.is_zero()) return out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.normalize_units();
  return out;
}

std::string RatFunc::to_string() const {
  if (den_ == IntPoly{1}) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

int multiplicity_at_one(IntPoly p) {
  int k = 0;
  const IntPoly root{-1, 1};
  while (!p.is_zero() && p.eval(Int(1)) == 0) {
    p = *divide_exact(p, root);
    ++k;
  }
  return k;
}

}  // namespace

int pole_order_at_one(const RatFunc& f) {
  if (f.is_zero()) return 0;
  return multiplicity_at_one(f.den()) - multiplicity_at_one(f.num());
}

std::vector<Rat> series_coeffs(const RatFunc& f, std::size_t n) {
  std::vector<Rat> a(n + 1);
  const auto q = f.den().coeffs();
  const Rat q0(q[0]);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat acc(f.num().coeff(k));
    for (std::size_t j = 1; j < q.size() && j <= k; ++j) {
      if (q[j] != 0) acc -= Rat(q[j]) * a[k - j];
    }
    a[k] = acc / q0;
  }
  return a;
}

LaurentTerm laurent_leading_at_infinity(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "Laurent expansion of zero");
  Rat c(f.num().leading(), f.den().leading());
  c.canonicalize();
  return {f.num().degree() - f.den().degree(), c};
}

std::optional<StanleyData> stanley_gorenstein_test(const RatFunc& f) {
  if (f.is_zero()) return std::nullopt;
  const IntPoly& p = f.num();
  const IntPoly& q = f.den();
  const std::size_t k = p.low_degree();
  const IntPoly p0 = *divide_exact(p, IntPoly::monomial(1, k));
  const IntPoly lhs = p0.reversed() * q;
  const IntPoly rhs = p0 * q.reversed();
  const int l = q.degree() - p.degree() - static_cast<int>(k);
  if (lhs == rhs) return StanleyData{1, l};
  if (lhs == -rhs) return StanleyData{-1, l};
  return std::nullopt;
}

IntPoly product_one_minus(const std::vector<std::pair<std::size_t, long>>& factors) {
  IntPoly out{1};
  for (const auto& [d, c] : factors) out *= IntPoly::one_minus(d, c);
  return out;
}

}  // namespace dupinv
