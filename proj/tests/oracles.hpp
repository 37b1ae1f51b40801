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


// Independent reference computations shared by the unit tests and the
// acceptance run. Floating point appears only here.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "dupinv/cyclotomic.hpp"
#include "dupinv/poly.hpp"

namespace oracle {

using dupinv::CycNum;
using dupinv::Int;
using dupinv::IntPoly;
using dupinv::Rat;

inline IntPoly derivative(const IntPoly& p) {
  std::vector<Int> c;
  for (int k = 1; k <= p.degree(); ++k) c.push_back(p.coeff(k) * k);
  return IntPoly(c);
}

// Largest distance of a root of the squarefree part from the unit circle.
inline double unit_circle_defect(const IntPoly& p) {
  IntPoly sq = p;
  const IntPoly g = dupinv::gcd(p, derivative(p));
  if (g.degree() > 0) sq = *dupinv::divide_exact(p, g);
  const int n = sq.degree();
  if (n <= 0) return 0;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  const double lead = sq.leading().get_d();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -sq.coeff(i).get_d() / lead;
  const Eigen::VectorXcd roots = comp.eigenvalues();
  double worst = 0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(std::abs(roots(i)) - 1.0));
  return worst;
}

// Kronecker: an integer polynomial with unit leading coefficient and all
// roots on the unit circle is a product of cyclotomic polynomials.
inline bool unit_circle(const IntPoly& p, double tol = 1e-9) {
  if (abs(p.leading()) != 1) return false;
  return unit_circle_defect(p) <= tol;
}

// Taylor coefficients of num / den through degree n, with 1/den expanded
// as a geometric series in (1 - den / den(0)).
inline std::vector<Rat> convolution_series(const IntPoly& num, const IntPoly& den, std::size_t n) {
  std::vector<Rat> e(n + 1), inv(n + 1), power(n + 1);
  const Rat d0(den.coeff(0));
  for (std::size_t k = 1; k <= n; ++k) e[k] = -Rat(den.coeff(k)) / d0;
  power[0] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) inv[i] += power[i];
    std::vector<Rat> next(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += power[i] * e[j];
    }
    power = std::move(next);
  }
  std::vector<Rat> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += Rat(num.coeff(i)) * inv[j];
  }
  for (auto& x : out) x /= d0;
  return out;
}

inline std::complex<double> zeta(std::uint64_t n, std::int64_t k) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

struct Evaluated {
  CycNum exact;
  std::complex<double> approx;
};

// Random expression tree; leaves are small rationals and roots of unity of
// order dividing 120.
inline Evaluated random_expr(std::mt19937_64& rng, int depth) {
  static const std::uint64_t orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 3 == 0) {
      const long p = static_cast<long>(rng() % 9) - 4;
      const long q = static_cast<long>(rng() % 4) + 1;
      return {CycNum(Rat(p, q)), {static_cast<double>(p) / static_cast<double>(q), 0}};
    }
    const std::uint64_t n = orders[rng() % 8];
    const std::int64_t k = static_cast<std::int64_t>(rng() % 25) - 12;
    return {CycNum::zeta(n, k), zeta(n, k)};
  }
  Evaluated a = random_expr(rng, depth - 1);
  Evaluated b = random_expr(rng, depth - 1);
  switch (rng() % 5) {
    case 0: return {a.exact + b.exact, a.approx + b.approx};
    case 1: return {a.exact - b.exact, a.approx - b.approx};
    case 2: return {a.exact * b.exact, a.approx * b.approx};
    case 3:
      if (b.exact.is_zero()) return {a.exact + b.exact, a.approx + b.approx};
      return {a.exact / b.exact, a.approx / b.approx};
    default: return {-a.exact, -a.approx};
  }
}

// diag(zeta_m^p, zeta_m^q)
struct DiagGen {
  std::int64_t p, q;
};

// Hilbert series coefficients of the invariants of a diagonal group acting
// on the down-up algebra, by counting invariant basis monomials
// u^a d^b (ud)^c of degree a + b + 2c. (ud) has weight (1, 1).
inline std::vector<long> downup_diagonal_count(std::int64_t m, const std::vector<DiagGen>& gens, std::size_t n) {
  std::vector<long> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t c = 0; 2 * c <= k; ++c) {
      for (std::size_t a = 0; a + 2 * c <= k; ++a) {
        const std::size_t b = k - 2 * c - a;
        const auto x = static_cast<std::int64_t>(a + c), y = static_cast<std::int64_t>(b + c);
        bool fixed = true;
        for (const DiagGen& g : gens) fixed = fixed && ((g.p * x + g.q * y) % m + m) % m == 0;
        if (fixed) ++out[k];
      }
    }
  }
  return out;
}

}  // namespace oracle
