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


// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dupinv/checks.hpp"
#include "dupinv/invariants.hpp"
#include "oracles.hpp"

using namespace dupinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

IntPoly om(std::size_t k) { return IntPoly::one_minus(k); }
IntPoly op(std::size_t k) { return IntPoly::one_minus(k, -1); }
IntPoly mono(long c, std::size_t k) { return IntPoly::monomial(c, k); }
std::string str(std::uint64_t n) { return std::to_string(n); }

std::vector<Rat> as_rats(const std::vector<long>& v) { return {v.begin(), v.end()}; }

bool all_passed(const std::vector<CheckResult>& rs) {
  for (const CheckResult& r : rs) {
    if (!r.passed) return false;
  }
  return !rs.empty();
}

constexpr std::size_t kSeriesDepth = 40;

Outcome cyclic_series() {
  Outcome o;
  const AlgebraCtx ctx = AlgebraCtx::down_up(1, 1);
  for (std::uint64_t n = 2; n <= 10; ++n) {
    const RatFunc want(om(2 * n), om(n).pow(2) * om(2).pow(2));
    o.require(molien(ctx, close_group(q_family_generators(1, n))) == want, "series n=" + str(n));
    const auto m = static_cast<std::int64_t>(n);
    o.require(series_coeffs(want, kSeriesDepth) == as_rats(oracle::downup_diagonal_count(m, {{1, -1}}, kSeriesDepth)),
              "monomial count n=" + str(n));
  }
  o.detail = o.pass ? "n = 2..10, closed form and monomial count" : o.detail;
  return o;
}

Outcome q2_series() {
  Outcome o;
  const AlgebraCtx ctx = AlgebraCtx::down_up(1, 1);
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const RatFunc want(om(4 * n) * op(4), om(2 * n).pow(2) * om(4).pow(2));
    o.require(molien(ctx, close_group(q_family_generators(2, n))) == want, "series n=" + str(n));
    const auto m = static_cast<std::int64_t>(2 * n);
    o.require(series_coeffs(want, kSeriesDepth) ==
                  as_rats(oracle::downup_diagonal_count(m, {{1, -1}, {static_cast<std::int64_t>(n), 0}}, kSeriesDepth)),
              "monomial count n=" + str(n));
    // Partial sum over <c_eps>: the t^k coefficient is 2n times the number of
    // 0 <= j <= k with 2j = k mod 2n.
    const RatFunc s1 = Rat(static_cast<long>(2 * n)) * RatFunc(om(4 * n), om(2 * n).pow(2) * om(2));
    std::vector<Rat> count(kSeriesDepth + 1);
    for (std::size_t k = 0; k <= kSeriesDepth; ++k) {
      long c = 0;
      for (std::size_t j = 0; j <= k; ++j) c += ((2 * j + 2 * n * k - k) % (2 * n) == 0);
      count[k] = Rat(static_cast<long>(2 * n) * c);
    }
    o.require(series_coeffs(s1, kSeriesDepth) == count, "partial sum count n=" + str(n));
    o.require(all_passed(check_example83(n)), "partial sums n=" + str(n));
  }
  o.detail = o.pass ? "n = 1..6, series and partial sum" : o.detail;
  return o;
}

Outcome q3_series() {
  Outcome o;
  const AlgebraCtx ctx = AlgebraCtx::down_up(1, 1);
  for (std::uint64_t n = 1; n <= 21; n += 2) {
    const IntPoly num = (IntPoly{1} + mono(1, n) + mono(1, 2 * n)) * op(4) + mono(2, n + 2);
    const RatFunc want(num, om(2 * n) * om(4).pow(2));
    const RatFunc got = molien(ctx, close_group(q_family_generators(3, n)));
    o.require(got == want, "series n=" + str(n));
    const auto m = static_cast<std::int64_t>(2 * n);
    o.require(series_coeffs(want, kSeriesDepth) ==
                  as_rats(oracle::downup_diagonal_count(m, {{2, -2}, {static_cast<std::int64_t>(n), 0}}, kSeriesDepth)),
              "monomial count n=" + str(n));
    const bool cyc = is_cyclotomic_product(num).has_value();
    o.require(cyc == (n == 1), "cyclotomic flag n=" + str(n));
    o.require(oracle::unit_circle(num) == cyc, "root oracle n=" + str(n));
    o.require(is_cyclotomic_product(got.num().primitive_part()).has_value() == cyc, "reduced numerator n=" + str(n));
    if (n == 1) {
      o.require(got == RatFunc(om(6), om(1) * om(2) * om(3) * om(4)), "alternative form at n=1");
    }
  }
  o.detail = o.pass ? "odd n <= 21, cyclotomic only at n = 1" : o.detail;
  return o;
}

Outcome q4_series() {
  Outcome o;
  for (const auto& [a, b] : std::vector<std::pair<Rat, Rat>>{{1, 1}, {1, -1}}) {
    const AlgebraCtx ctx = AlgebraCtx::down_up(a, b);
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const IntPoly f = op(4 * n) * op(4) + mono(4, 2 * n + 2);
      const RatFunc want(om(4 * n) * f, om(4 * n).pow(2) * om(4).pow(2));
      const MatGroup h = close_group(q_family_generators(4, n));
      o.require(molien(ctx, h) == want, "series n=" + str(n));
      const auto m = static_cast<std::int64_t>(4 * n);
      o.require(series_coeffs(want, kSeriesDepth) ==
                    as_rats(oracle::downup_diagonal_count(m, {{m / 2 + 1, -1}}, kSeriesDepth)),
                "monomial count n=" + str(n));
      o.require(!is_cyclotomic_product(f).has_value(), "cyclotomic n=" + str(n));
      o.require(!oracle::unit_circle(f), "root oracle n=" + str(n));
      o.require(h.order() == 2 * bireflection_subgroup(ctx, h).order(), "bireflection index n=" + str(n));
    }
  }
  o.detail = o.pass ? "n = 1..10, non-cyclotomic, bireflection index 2" : o.detail;
  return o;
}

Outcome family_sweep() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const IntPoly f1 = lemma86_family1(n);
    const IntPoly f2 = lemma86_family2(n);
    o.require(f1 == (IntPoly{1} + mono(1, n) + mono(1, 2 * n)) * op(4) + mono(2, n + 2), "family 1 shape");
    o.require(f2 == op(2 * n) * op(4) + mono(4, n + 2), "family 2 shape");
    if (n >= 2) {
      o.require(!is_cyclotomic_product(f1).has_value(), "family 1 n=" + str(n));
      o.require(!oracle::unit_circle(f1), "family 1 oracle n=" + str(n));
    }
    o.require(!is_cyclotomic_product(f2).has_value(), "family 2 n=" + str(n));
    o.require(!oracle::unit_circle(f2), "family 2 oracle n=" + str(n));
  }
  const IntPoly f = lemma86_family1(1);
  const auto fac = is_cyclotomic_product(f);
  const IntPoly phi = cyclotomic_poly(2).pow(2) * cyclotomic_poly(4) * cyclotomic_poly(6);
  o.require(fac.has_value() && fac->expand() == f, "family 1 n=1 factorization");
  o.require(f == phi || f == -phi, "family 1 n=1 equals Phi2^2 Phi4 Phi6");
  o.require(oracle::unit_circle(f), "family 1 n=1 root oracle");
  o.require(all_passed(sweep_lemma86(60)), "sweep checks");
  o.detail = o.pass ? "n <= 60, both families, n = 1 exception confirmed" : o.detail;
  return o;
}

Outcome three_variable() {
  Outcome o;
  for (std::uint64_t n = 3; n <= 21; n += 2) {
    const IntPoly f = mono(1, 2 * n) + mono(1, n + 2) + mono(1, n) + IntPoly{1};
    const CycNum eps = CycNum::zeta(n);
    const MatN c = MatN::diag({eps, eps.inverse(), CycNum(1L)});
    const RatFunc got = polyring_molien({c, MatN::diag({CycNum(-1L), CycNum(1L), CycNum(1L)})});
    o.require(got == RatFunc(f, om(1) * om(4) * om(2 * n)), "series n=" + str(n));
    o.require(!is_cyclotomic_product(f).has_value(), "numerator n=" + str(n));
    // Real root below -1: f(-1) = 0, f decreasing through -1, f(-2) > 0.
    const Rat left(-10001, 10000);
    o.require(f.eval(Rat(-1)) == 0 && f.eval(left) < 0 && f.eval(Rat(-2)) > 0, "sign change n=" + str(n));
    const RatFunc literal = polyring_molien({c, MatN::diag({CycNum(-1L), CycNum(1L), CycNum(-1L)})});
    o.require(!is_cyclotomic_product(literal.num().primitive_part()).has_value(), "bireflection group n=" + str(n));
  }
  o.detail = o.pass ? "odd n = 3..21" : o.detail;
  return o;
}

Outcome jordan_plane() {
  Outcome o;
  const RatFunc want(om(4), om(2).pow(3));
  const RatFunc got = molien(AlgebraCtx::jordan_plane(), close_group({mat_diag(-1L, -1L)}));
  o.require(got == want, "series");
  o.require(stanley_gorenstein_test(got).has_value(), "functional equation");
  std::vector<Rat> even(kSeriesDepth + 1);
  for (std::size_t k = 0; k <= kSeriesDepth; k += 2) even[k] = static_cast<long>(k + 1);
  o.require(series_coeffs(got, kSeriesDepth) == even, "even degree count");
  o.require(all_passed(check_case21()), "case checks");
  return o;
}

Outcome involution_hdet() {
  Outcome o;
  const auto rs = check_table2_hdet(8);
  o.require(all_passed(rs), "table rows");
  std::size_t a = 0, d = 0, e = 0;
  for (const CheckResult& r : rs) {
    if (r.check_id.find(".product") != std::string::npos) continue;
    const char kind = r.check_id[7];
    a += kind == 'A';
    d += kind == 'D';
    e += kind == 'E';
  }
  // A3 occurs for odd n only.
  o.require(a == 4 * 8 + 4, "A rows present");
  o.require(d == 2 * 5, "D rows present");
  o.require(e == 4, "E rows present");
  o.detail = o.pass ? std::to_string(a + d + e) + " involutions, hdet -1" : o.detail;
  return o;
}

struct SweepItem {
  AlgebraCtx ctx;
  std::vector<Mat2> gens;
  std::string name;
};

std::vector<SweepItem> consistency_sweep() {
  std::vector<SweepItem> out;
  for (const auto& [a, b] : std::vector<std::pair<Rat, Rat>>{{1, 1}, {0, 1}, {2, -1}, {3, -1}}) {
    const AlgebraCtx ctx = AlgebraCtx::down_up(a, b);
    const auto admitted = [&](const std::vector<Mat2>& gens) {
      for (const Mat2& g : gens) {
        if (!ctx.admits(g)) return false;
      }
      return true;
    };
    const std::string tag = "(" + to_string(a) + "," + to_string(b) + ") ";
    for (int family = 1; family <= 8; ++family) {
      for (std::uint64_t n = 1; n <= 8; ++n) {
        if (family == 3 && n % 2 == 0) continue;
        for (int variant = 0; variant < (family >= 7 ? 2 : 1); ++variant) {
          auto gens = q_family_generators(family, n, variant);
          if (admitted(gens)) out.push_back({ctx, gens, tag + "Q" + std::to_string(family) + " n=" + str(n)});
        }
      }
    }
    for (std::uint64_t m = 1; m <= 12; ++m) {
      std::vector<Mat2> gens{mat_c(CycNum::zeta(m))};
      if (admitted(gens)) out.push_back({ctx, gens, tag + "C_" + str(m)});
    }
    for (std::uint64_t m = 1; m <= 6; ++m) {
      std::vector<Mat2> gens{mat_s1(), mat_c(CycNum::zeta(2 * m))};
      if (admitted(gens)) out.push_back({ctx, gens, tag + "BD_" + str(4 * m)});
    }
  }
  return out;
}

Outcome condition_consistency(const std::vector<SweepItem>& sweep) {
  Outcome o;
  for (const SweepItem& s : sweep) {
    const Theorem03Report r = theorem03_report(s.ctx, close_group(s.gens));
    o.require(r.C2 == r.C3, "C2 vs C3 at " + s.name);
    o.require(r.consistent, "consistent flag at " + s.name);
    o.require(r.gorenstein_by_hdet == r.gorenstein_by_stanley, "hdet vs functional equation at " + s.name);
  }
  o.detail = o.pass ? std::to_string(sweep.size()) + " instances" : o.detail;
  return o;
}

Outcome no_quasi_reflections(const std::vector<SweepItem>& sweep) {
  Outcome o;
  std::size_t elements = 0;
  for (const SweepItem& s : sweep) {
    for (const Mat2& g : close_group(s.gens).elements) {
      if (g.is_identity()) continue;
      ++elements;
      o.require(trace_of(s.ctx, g).pole_order_at_one() != 2, "pole order 2 at " + s.name);
      o.require(!is_quasi_reflection(s.ctx, g), "quasi-reflection at " + s.name);
    }
  }
  o.detail = o.pass ? std::to_string(elements) + " non-identity elements" : o.detail;
  return o;
}

Outcome oracle_suites() {
  Outcome o;
  std::mt19937_64 rng(20261018);
  std::size_t cyc_cases = 0, series_cases = 0, expr_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    IntPoly p{1};
    for (int i = 0, k = 1 + static_cast<int>(rng() % 4); i < k; ++i) p *= cyclotomic_poly(1 + rng() % 30);
    if (rng() % 2) p = -p;
    if (trial % 2) {
      p += mono((rng() % 2 ? 1 : -1) * static_cast<long>(1 + rng() % 2), rng() % (p.degree() + 1));
      if (p.is_zero()) p = IntPoly{1, 1};
    }
    const auto f = is_cyclotomic_product(p);
    o.require(f.has_value() == oracle::unit_circle(p), "cyclotomic product " + p.to_string());
    if (f) o.require(f->expand() == p, "factorization expands " + p.to_string());
    ++cyc_cases;
  }
  std::uniform_int_distribution<long> c(-5, 5);
  while (series_cases < 100) {
    std::vector<Int> nv(1 + rng() % 7), dv(1 + rng() % 6);
    for (auto& x : nv) x = c(rng);
    for (auto& x : dv) x = c(rng);
    IntPoly num(nv), den(dv);
    if (den.coeff(0) == 0) den += IntPoly{1};
    if (num.is_zero() || den.is_zero()) continue;
    o.require(series_coeffs(RatFunc(num, den), 32) == oracle::convolution_series(num, den, 32),
              "series of " + num.to_string() + " / " + den.to_string());
    ++series_cases;
  }
  for (; expr_cases < 200; ++expr_cases) {
    const oracle::Evaluated e = oracle::random_expr(rng, 5);
    const double scale = std::max(1.0, std::abs(e.approx));
    o.require(std::abs(e.exact.embed() - e.approx) / scale < 1e-9, "embedding of " + e.exact.to_string());
  }
  o.detail = o.pass ? std::to_string(cyc_cases) + " factorizations, " + std::to_string(series_cases) + " series, " +
                          std::to_string(expr_cases) + " expressions"
                    : o.detail;
  return o;
}

Outcome four_generator_average() {
  Outcome o;
  for (const auto& [v, w] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 3}}) {
    const RatFunc want(om(2 * (v + w)), om(v) * om(w) * om(2 * v) * om(2 * w) * om(v + w));
    const RatFunc direct = Rat(1, 2) * (RatFunc(IntPoly{1}, om(v).pow(2) * om(w).pow(2)) +
                                        RatFunc(IntPoly{1}, om(2 * v) * om(2 * w)));
    const std::string at = "(v,w)=(" + str(v) + "," + str(w) + ")";
    o.require(direct == want, "closed form " + at);
    o.require(all_passed(check_example59(v, w)), "library average " + at);
  }
  return o;
}

}  // namespace

int main() {
  const auto sweep = consistency_sweep();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Q1 Hilbert series", cyclic_series},
      {"Q2 Hilbert series and partial sum", q2_series},
      {"Q3 Hilbert series and cyclotomicity", q3_series},
      {"Q4 Hilbert series, non-cyclotomic, bireflection index", q4_series},
      {"numerator families non-cyclotomic", family_sweep},
      {"three-variable bireflection group numerator", three_variable},
      {"Jordan plane with rho_-1", jordan_plane},
      {"involution homological determinants", involution_hdet},
      {"C2 and C3 agree across the sweep", [&] { return condition_consistency(sweep); }},
      {"no quasi-reflections across the sweep", [&] { return no_quasi_reflections(sweep); }},
      {"oracle suites", oracle_suites},
      {"four-generator Molien average", four_generator_average},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %s (%.2fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
