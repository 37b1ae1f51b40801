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

#include "dupinv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dupinv/error.hpp"
#include "dupinv/numtheory.hpp"
#include "dupinv/poly.hpp"

namespace dupinv {

namespace {

void check_conductor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::ZeroConductor, "conductor must be positive");
  if (n > kMaxConductor) {
    throw Error(ErrorCode::PromotionOverflow, "conductor " + std::to_string(n) + " exceeds cap");
  }
}

// In place reduction of sum v[i] zeta^i modulo Phi_n, leaving phi(n) entries.
void reduce(std::uint64_t n, std::vector<Rat>& v) {
  const IntPoly& phi = cyclotomic_poly(n);
  const auto pc = phi.coeffs();
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  Rat tmp;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    const Rat c = v[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (pc[j] == 0) continue;
      tmp = c * pc[j];
      v[i - deg + j] -= tmp;
    }
    v[i] = 0;
  }
  v.resize(deg);
}

}  // namespace

std::uint64_t common_conductor(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t l = std::lcm(a, b);
  check_conductor(l);
  return l;
}

CycNum CycNum::make(std::uint64_t conductor, std::vector<Rat> coeffs) {
  check_conductor(conductor);
  for (Rat& c : coeffs) c.canonicalize();
  if (coeffs.size() > conductor) {
    std::vector<Rat> folded(conductor);
    for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % conductor] += coeffs[i];
    coeffs = std::move(folded);
  }
  reduce(conductor, coeffs);
  const std::size_t phi = euler_phi(conductor);
  coeffs.resize(phi);
  return CycNum(conductor, std::move(coeffs), true);
}

CycNum cyc_make(std::uint64_t conductor, std::vector<Rat> coeffs) {
  return CycNum::make(conductor, std::move(coeffs));
}

CycNum CycNum::zeta(std::uint64_t n, std::int64_t k) {
  check_conductor(n);
  std::vector<Rat> v(n);
  v[static_cast<std::size_t>(floor_mod(k, static_cast<std::int64_t>(n)))] = 1;
  return make(n, std::move(v));
}

bool CycNum::is_zero() const {
  for (const Rat& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<Rat> CycNum::to_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

CycNum CycNum::promote(std::uint64_t m) const {
  if (m == conductor_) return *this;
  check_conductor(m);
  if (m % conductor_ != 0) {
    throw Error(ErrorCode::InvalidArgument, "promotion target is not a multiple of the conductor");
  }
  std::vector<Rat> v(m);
  if (conductor_ == 1) {
    v[0] = coeffs_[0];
    v.resize(euler_phi(m));
    return CycNum(m, std::move(v), true);
  }
  const std::uint64_t step = m / conductor_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
  reduce(m, v);
  return CycNum(m, std::move(v), true);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) {
    CycNum out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
  }
  const std::uint64_t n = common_conductor(a.conductor_, b.conductor_);
  return a.promote(n) + b.promote(n);
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const CycNum& scalar = a.conductor_ == 1 ? a : b;
    const CycNum& other = a.conductor_ == 1 ? b : a;
    CycNum out = other;
    const Rat& s = scalar.coeffs_[0];
    for (Rat& c : out.coeffs_) c *= s;
    return out;
  }
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t n = common_conductor(a.conductor_, b.conductor_);
    return a.promote(n) * b.promote(n);
  }
  const std::size_t phi = a.coeffs_.size();
  std::vector<Rat> v(2 * phi - 1);
  Rat tmp;
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      tmp = a.coeffs_[i] * b.coeffs_[j];
      v[i + j] += tmp;
    }
  }
  reduce(a.conductor_, v);
  return CycNum(a.conductor_, std::move(v), true);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t n = common_conductor(a.conductor_, b.conductor_);
  return a.promote(n).coeffs_ == b.promote(n).coeffs_;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in a cyclotomic field");
  if (auto r = to_rational()) return CycNum(Rat(1 / *r));
  const std::size_t phi = coeffs_.size();
  std::size_t nonzero = 0, last = 0;
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] != 0) {
      ++nonzero;
      last = i;
    }
  }
  if (nonzero == 1) {
    return CycNum(Rat(1 / coeffs_[last])) *
           zeta(conductor_, -static_cast<std::int64_t>(last));
  }
  // Solve (x * y) = 1 for y: column j of the matrix holds x * zeta^j.
  std::vector<std::vector<Rat>> m(phi, std::vector<Rat>(phi + 1));
  CycNum col = *this;
  const CycNum z = zeta(conductor_);
  for (std::size_t j = 0; j < phi; ++j) {
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
    if (j + 1 < phi) col = col * z;
  }
  m[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const Rat piv = m[c][c];
    for (std::size_t k = c; k <= phi; ++k) m[c][k] /= piv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rat> y(phi);
  for (std::size_t i = 0; i < phi; ++i) y[i] = m[i][phi];
  return CycNum(conductor_, std::move(y), true);
}

CycNum CycNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1L);
  CycNum base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::complex<double> CycNum::embed() const {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(conductor_);
    acc += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    const Rat mag = abs(c);
    // A leading '-' binds to the atom before '^', so write -1* for powers.
    const bool lead_minus_power = first && c < 0 && mag == 1 && i > 1;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << dupinv::to_string(mag);
      continue;
    }
    if (mag != 1 || lead_minus_power) os << dupinv::to_string(mag) << "*";
    os << "zeta(" << conductor_ << ")";
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

std::size_t CycNum::raw_hash() const {
  std::size_t seed = std::hash<std::uint64_t>{}(conductor_);
  for (const Rat& c : coeffs_) hash_combine(seed, hash_value(c));
  return seed;
}

namespace {

struct PowerTable {
  std::vector<CycNum> powers;
  std::unordered_multimap<std::size_t, std::uint64_t> index;
};

std::mutex g_table_mutex;
std::map<std::uint64_t, std::shared_ptr<const PowerTable>> g_tables;

// Powers zeta_n^j, j < n, written over conductor n.
std::shared_ptr<const PowerTable> power_table(std::uint64_t n) {
  {
    std::lock_guard lock(g_table_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return it->second;
  }
  auto table = std::make_shared<PowerTable>();
  table->powers.reserve(n);
  const CycNum z = CycNum::zeta(n);
  CycNum cur = CycNum(1L).promote(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    table->index.emplace(cur.raw_hash(), j);
    table->powers.push_back(cur);
    cur = cur * z;
  }
  std::lock_guard lock(g_table_mutex);
  return g_tables.emplace(n, std::move(table)).first->second;
}

constexpr std::uint64_t kTableLimit = 4096;

}  // namespace

std::optional<RootOfUnity> root_of_unity_log(const CycNum& x) {
  if (x.is_zero()) return std::nullopt;
  for (const Rat& c : x.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
  }
  const std::uint64_t n = std::lcm<std::uint64_t>(2, x.conductor());
  if (n <= kTableLimit) {
    const auto table = power_table(n);
    const CycNum y = x.promote(n);
    auto [lo, hi] = table->index.equal_range(y.raw_hash());
    for (auto it = lo; it != hi; ++it) {
      if (table->powers[it->second].coeffs().size() == y.coeffs().size() &&
          std::equal(y.coeffs().begin(), y.coeffs().end(), table->powers[it->second].coeffs().begin())) {
        const std::uint64_t j = it->second;
        const std::uint64_t g = std::gcd(j, n);
        return RootOfUnity{n / g, j / g};
      }
    }
    return std::nullopt;
  }
  auto m = root_of_unity_order(x);
  if (!m) return std::nullopt;
  const CycNum y = x.promote(std::lcm(*m, x.conductor()));
  for (std::uint64_t k = 1; k <= *m; ++k) {
    if (std::gcd(k, *m) != 1) continue;
    if (CycNum::zeta(*m, static_cast<std::int64_t>(k)) == y) return RootOfUnity{*m, k % *m};
  }
  return std::nullopt;
}

std::optional<std::uint64_t> root_of_unity_order(const CycNum& x) {
  if (x.is_zero()) return std::nullopt;
  const std::uint64_t n = std::lcm<std::uint64_t>(2, x.conductor());
  if (n <= kTableLimit) {
    auto r = root_of_unity_log(x);
    if (!r) return std::nullopt;
    return r->order;
  }
  if (!x.pow(static_cast<std::int64_t>(n)).is_one()) return std::nullopt;
  std::uint64_t m = n;
  for (std::uint64_t p : prime_factors(n)) {
    while (m % p == 0 && x.pow(static_cast<std::int64_t>(m / p)).is_one()) m /= p;
  }
  return m;
}

}  // namespace dupinv
