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

#include "dupinv/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "dupinv/error.hpp"
#include "dupinv/numtheory.hpp"

namespace dupinv {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t exponent) {
  std::vector<Int> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus(std::size_t k, long c) {
  std::vector<Int> v(k + 1);
  v[0] += 1;
  v[k] -= c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::low_degree() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  const Int g = content();
  IntPoly out = *this;
  if (g != 1) {
    for (Int& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

IntPoly IntPoly::reversed() const {
  IntPoly out = *this;
  std::reverse(out.coeffs_.begin(), out.coeffs_.end());
  out.trim();
  return out;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Int> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::compose_power(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<Int> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_variable() const {
  IntPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Int& c) {
  for (Int& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::vector<long long> IntPoly::to_int64() const {
  std::vector<long long> out;
  out.reserve(coeffs_.size());
  for (const Int& c : coeffs_) {
    if (!c.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "coefficient exceeds 64 bits");
    out.push_back(c.get_si());
  }
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<Int> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Int> quot(static_cast<std::size_t>(da - db + 1));
  const Int& lead = b.leading();
  const auto bc = b.coeffs();
  const bool unit_lead = lead == 1;
  for (int i = da - db; i >= 0; --i) {
    Int& top = rem[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    Int q;
    if (unit_lead) {
      q = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    }
    for (int j = 0; j <= db; ++j) {
      if (bc[static_cast<std::size_t>(j)] == 0) continue;
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), q.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(i)] = std::move(q);
  }
  for (int k = 0; k < db; ++k) {
    if (rem[static_cast<std::size_t>(k)] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Int> rem(a.coeffs().begin(), a.coeffs().end());
  const Int& lead = b.leading();
  const auto bc = b.coeffs();
  for (int top = a.degree(); top >= db; --top) {
    const Int c = rem[static_cast<std::size_t>(top)];
    for (auto& r : rem) r *= lead;
    if (c != 0) {
      for (int j = 0; j <= db; ++j) {
        mpz_submul(rem[static_cast<std::size_t>(top - db + j)].get_mpz_t(), c.get_mpz_t(),
                   bc[static_cast<std::size_t>(j)].get_mpz_t());
      }
    }
    rem.pop_back();
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly::constant(1);
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && x.leading() < 0) x = -x;
  return x;
}

namespace {

std::mutex g_cyclotomic_mutex;
std::map<std::uint64_t, IntPoly> g_cyclotomic_cache;

}  // namespace

const IntPoly& cyclotomic_poly(std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  {
    std::lock_guard lock(g_cyclotomic_mutex);
    auto it = g_cyclotomic_cache.find(d);
    if (it != g_cyclotomic_cache.end()) return it->second;
  }
  // t^d - 1 divided by every Phi_e, e | d, e < d.
  IntPoly p = IntPoly::one_minus(d);
  p = -p;
  for (std::uint64_t e : divisors(d)) {
    if (e == d) break;
    auto q = divide_exact(p, cyclotomic_poly(e));
    p = std::move(*q);
  }
  std::lock_guard lock(g_cyclotomic_mutex);
  return g_cyclotomic_cache.emplace(d, std::move(p)).first->second;
}

IntPoly CycFactorization::expand() const {
  IntPoly out = IntPoly::constant(unit);
  for (const auto& [d, m] : factors) out *= cyclotomic_poly(d).pow(m);
  return out;
}

namespace {

// Kronecker: when every root lies on the unit circle, so does every root of
// each Graeffe iterate, and the coefficients stay below binomial(deg, k). A
// root off the circle makes them blow up within a few squarings.
bool graeffe_rejects(const IntPoly& p, int rounds) {
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  std::vector<Int> bound(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) mpz_bin_uiui(bound[k].get_mpz_t(), deg, k);
  IntPoly cur = p;
  for (int r = 0; r < rounds; ++r) {
    const IntPoly sq = cur * cur.negate_variable();
    std::vector<Int> next(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) next[k] = sq.coeff(2 * k);
    cur = IntPoly(std::move(next));
    for (std::size_t k = 0; k <= deg; ++k) {
      if (abs(cur.coeff(k)) > bound[k]) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<CycFactorization> is_cyclotomic_product(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cyclotomic test of the zero polynomial");
  if (abs(p.leading()) != 1 || abs(p.coeff(0)) != 1) return std::nullopt;
  if (p.degree() > 0 && graeffe_rejects(p, 16)) return std::nullopt;
  CycFactorization result;
  IntPoly residue = p;
  // phi(d) >= sqrt(d/2), so every Phi_d of degree <= deg p has d <= 2 deg^2.
  const std::uint64_t deg = static_cast<std::uint64_t>(p.degree());
  const std::uint64_t bound = 2 * deg * deg + 2;
  for (std::uint64_t d = 1; d <= bound && residue.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(residue.degree())) continue;
    unsigned mult = 0;
    while (residue.degree() > 0) {
      auto q = divide_exact(residue, cyclotomic_poly(d));
      if (!q) break;
      residue = std::move(*q);
      ++mult;
    }
    if (mult) result.factors.emplace_back(d, mult);
  }
  if (residue.degree() != 0 || abs(residue.leading()) != 1) return std::nullopt;
  result.unit = residue.leading() > 0 ? 1 : -1;
  return result;
}

}  // namespace dupinv
