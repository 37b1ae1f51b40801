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

#include "dupinv/checks.hpp"

#include <sstream>

#include "dupinv/error.hpp"
#include "dupinv/invariants.hpp"

namespace dupinv {

namespace {

using Params = std::map<std::string, long long>;

IntPoly om(std::uint64_t k, long c = 1) { return IntPoly::one_minus(k, c); }
IntPoly op(std::uint64_t k, long c = 1) { return IntPoly::one_minus(k, -c); }  // 1 + c t^k
IntPoly mono(long c, std::uint64_t k) { return IntPoly::monomial(Int(c), k); }
long long ll(std::uint64_t v) { return static_cast<long long>(v); }

std::vector<bool> cyclotomic_flag(const IntPoly& p) { return {is_cyclotomic_product(p).has_value()}; }

}  // namespace

CheckResult make_check(std::string id, std::map<std::string, long long> params, CheckValue expected,
                       CheckValue computed, std::string note) {
  CheckResult r;
  r.check_id = std::move(id);
  r.parameters = std::move(params);
  r.passed = expected == computed;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.note = std::move(note);
  return r;
}

std::string render_value(const CheckValue& v) {
  struct Visitor {
    std::string operator()(const RatFunc& f) const { return f.to_string(); }
    std::string operator()(const IntPoly& p) const { return p.to_string(); }
    std::string operator()(const CycNum& x) const { return x.to_string(); }
    std::string operator()(const std::vector<bool>& flags) const {
      std::string s;
      for (bool b : flags) s += s.empty() ? (b ? "yes" : "no") : (b ? ",yes" : ",no");
      return s;
    }
  };
  return std::visit(Visitor{}, v);
}

IntPoly lemma86_family1(std::uint64_t n) {
  return (IntPoly{1} + mono(1, n) + mono(1, 2 * n)) * op(4) + mono(2, n + 2);
}

IntPoly lemma86_family2(std::uint64_t n) { return op(2 * n) * op(4) + mono(4, n + 2); }

CheckResult check_example82(std::uint64_t n, const Rat& alpha, const Rat& beta) {
  const auto ctx = AlgebraCtx::down_up(alpha, beta);
  const MatGroup h = close_group(q_family_generators(1, n));
  const RatFunc expected(om(2 * n), om(n).pow(2) * om(2).pow(2));
  return make_check("example82", {{"n", ll(n)}}, expected, molien(ctx, h),
                    "alpha=" + to_string(alpha) + " beta=" + to_string(beta));
}

std::vector<CheckResult> check_example83(std::uint64_t n) {
  std::vector<CheckResult> out;
  const auto ctx = AlgebraCtx::down_up(1, 1);
  const MatGroup h = close_group(q_family_generators(2, n));
  const RatFunc series = molien(ctx, h);
  out.push_back(make_check("example83.series", {{"n", ll(n)}},
                           RatFunc(om(4 * n) * op(4), om(2 * n).pow(2) * om(4).pow(2)), series));

  // S1 over <c_eps>, S2 over the coset d1 <c_eps>, both on k[t1, t2].
  const auto plane = AlgebraCtx::skew_plane(1L);
  const Mat2 c = mat_c(CycNum::zeta(2 * n));
  std::vector<TraceSeries> s1_terms, s2_terms;
  Mat2 g = Mat2::identity();
  for (std::uint64_t i = 0; i < 2 * n; ++i) {
    s1_terms.push_back(plane_trace(plane, g));
    s2_terms.push_back(plane_trace(plane, mat_d1() * g));
    g = g * c;
  }
  const Rat size(static_cast<long>(2 * n));
  const RatFunc s1 = size * molien_average(s1_terms);
  const RatFunc s2 = size * molien_average(s2_terms);
  out.push_back(make_check("example83.S1", {{"n", ll(n)}},
                           size * RatFunc(om(4 * n), om(2 * n).pow(2) * om(2)), s1));
  out.push_back(make_check("example83.S2", {{"n", ll(n)}},
                           size * RatFunc(om(4 * n) * om(2), om(2 * n).pow(2) * om(4)), s2));
  const RatFunc recombined =
      Rat(1, static_cast<long>(4 * n)) * (s1 / RatFunc::from_poly(om(2)) + s2 / RatFunc::from_poly(op(2)));
  out.push_back(make_check("example83.recombined", {{"n", ll(n)}}, series, recombined));
  return out;
}

std::vector<CheckResult> check_lemma84(std::uint64_t n) {
  if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "Q3 needs odd n");
  std::vector<CheckResult> out;
  const auto ctx = AlgebraCtx::down_up(1, 1);
  const MatGroup h = close_group(q_family_generators(3, n));
  const RatFunc series = molien(ctx, h);
  const IntPoly f = lemma86_family1(n);
  out.push_back(make_check("lemma84.series", {{"n", ll(n)}}, RatFunc(f, om(2 * n) * om(4).pow(2)), series));
  out.push_back(make_check("lemma84.cyclotomic", {{"n", ll(n)}}, std::vector<bool>{n == 1},
                           cyclotomic_flag(series.num().primitive_part()), series.num().to_string()));
  out.push_back(make_check("lemma84.cyclotomic_displayed", {{"n", ll(n)}}, std::vector<bool>{n == 1},
                           cyclotomic_flag(f), f.to_string()));
  if (n == 1) {
    out.push_back(make_check("lemma84.alternative", {{"n", 1}},
                             RatFunc(om(6), om(1) * om(2) * om(3) * om(4)), series));
  }
  return out;
}

std::vector<CheckResult> check_lemma87(std::uint64_t n) {
  std::vector<CheckResult> out;
  const auto ctx = AlgebraCtx::down_up(1, 1);
  const MatGroup h = close_group(q_family_generators(4, n));
  const RatFunc series = molien(ctx, h);
  const IntPoly f = lemma86_family2(2 * n);
  out.push_back(make_check("lemma87.series", {{"n", ll(n)}},
                           RatFunc(om(4 * n) * f, om(4 * n).pow(2) * om(4).pow(2)), series));
  out.push_back(make_check("lemma87.cyclotomic", {{"n", ll(n)}}, std::vector<bool>{false},
                           cyclotomic_flag(series.num().primitive_part()), series.num().to_string()));
  out.push_back(make_check("lemma87.cyclotomic_displayed", {{"n", ll(n)}}, std::vector<bool>{false},
                           cyclotomic_flag(f), f.to_string()));
  const MatGroup b = bireflection_subgroup(ctx, h);
  out.push_back(make_check("lemma87.bireflection_index", {{"n", ll(n)}}, std::vector<bool>{true},
                           std::vector<bool>{b.order() * 2 == h.order()},
                           std::to_string(b.order()) + " of " + std::to_string(h.order())));
  return out;
}

std::vector<CheckResult> sweep_lemma86(std::uint64_t max_n) {
  std::vector<CheckResult> out;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const IntPoly f1 = lemma86_family1(n);
    const auto fac = is_cyclotomic_product(f1);
    out.push_back(make_check("lemma86.family1", {{"n", ll(n)}}, std::vector<bool>{n == 1},
                             std::vector<bool>{fac.has_value()}));
    if (n == 1) {
      const IntPoly expected = cyclotomic_poly(2).pow(2) * cyclotomic_poly(4) * cyclotomic_poly(6);
      out.push_back(make_check("lemma86.family1.factorization", {{"n", 1}}, expected,
                               fac ? IntPoly(fac->expand()) : IntPoly{}));
    }
    out.push_back(make_check("lemma86.family2", {{"n", ll(n)}}, std::vector<bool>{false},
                             cyclotomic_flag(lemma86_family2(n))));
  }
  return out;
}

std::vector<CheckResult> check_three_variable(std::uint64_t n) {
  if (n % 2 == 0 || n < 3) throw Error(ErrorCode::InvalidArgument, "odd n >= 3 expected");
  std::vector<CheckResult> out;
  const CycNum eps = CycNum::zeta(n);
  const MatN c = MatN::diag({eps, eps.inverse(), CycNum(1L)});
  const IntPoly f = mono(1, 2 * n) + mono(1, n + 2) + mono(1, n) + IntPoly{1};
  const RatFunc reflection = polyring_molien({c, MatN::diag({CycNum(-1L), CycNum(1L), CycNum(1L)})});
  out.push_back(make_check("threevar.series", {{"n", ll(n)}}, RatFunc(f, om(1) * om(4) * om(2 * n)),
                           reflection));
  out.push_back(make_check("threevar.numerator_cyclotomic", {{"n", ll(n)}}, std::vector<bool>{false},
                           cyclotomic_flag(f), f.to_string()));
  out.push_back(make_check("threevar.reduced_cyclotomic", {{"n", ll(n)}}, std::vector<bool>{false},
                           cyclotomic_flag(reflection.num().primitive_part()), reflection.num().to_string()));
  const RatFunc bireflection = polyring_molien({c, MatN::diag({CycNum(-1L), CycNum(1L), CycNum(-1L)})});
  out.push_back(make_check("threevar.bireflection_group_cyclotomic", {{"n", ll(n)}},
                           std::vector<bool>{false}, cyclotomic_flag(bireflection.num().primitive_part()),
                           bireflection.to_string()));
  return out;
}

std::vector<CheckResult> check_case21() {
  std::vector<CheckResult> out;
  const auto jordan = AlgebraCtx::jordan_plane();
  const RatFunc series = molien(jordan, close_group({mat_diag(-1L, -1L)}));
  out.push_back(make_check("case21.series", {}, RatFunc(om(4), om(2).pow(3)), series));
  out.push_back(make_check("case21.stanley", {}, std::vector<bool>{true},
                           std::vector<bool>{stanley_gorenstein_test(series).has_value()}));
  out.push_back(make_check("case21.trivial", {}, RatFunc(IntPoly{1}, om(1).pow(2)),
                           molien(jordan, close_group({Mat2::identity()}))));
  const CycNum z3 = CycNum::zeta(3);
  const RatFunc cubic = molien(jordan, close_group({mat_diag(z3, z3)}));
  out.push_back(make_check("case21.cubic_stanley", {}, std::vector<bool>{false},
                           std::vector<bool>{stanley_gorenstein_test(cubic).has_value()}, cubic.to_string()));
  out.push_back(make_check("case21.hdet", {}, CycNum(1L),
                           hdet_from_trace(plane_trace(jordan, mat_diag(-1L, -1L)), 2).value));
  return out;
}

std::vector<CheckResult> check_example59(std::uint64_t v, std::uint64_t w) {
  std::vector<CheckResult> out;
  const Params p{{"v", ll(v)}, {"w", ll(w)}};
  const CycNum one(1L), minus(-1L);
  const TraceSeries id = normal_sequence_trace({{v, one}, {v, one}, {w, one}, {w, one}});
  const TraceSeries z1 = normal_sequence_trace({{v, one}, {v, one}, {w, minus}, {w, minus}});
  const TraceSeries z2 = normal_sequence_trace({{v, one}, {v, minus}, {w, one}, {w, minus}});
  out.push_back(make_check("example59.hilbert", p, RatFunc(IntPoly{1}, om(v).pow(2) * om(w).pow(2)),
                           id.to_ratfunc()));
  out.push_back(make_check("example59.trace1", p, RatFunc(IntPoly{1}, om(v).pow(2) * op(w).pow(2)),
                           z1.to_ratfunc()));
  out.push_back(make_check("example59.trace2", p, RatFunc(IntPoly{1}, om(2 * v) * om(2 * w)), z2.to_ratfunc()));
  out.push_back(make_check("example59.average", p,
                           RatFunc(om(2 * (v + w)), om(v) * om(w) * om(2 * v) * om(2 * w) * om(v + w)),
                           molien_average({id, z2})));
  return out;
}

std::vector<CheckResult> check_table2_hdet(std::uint64_t max_n) {
  std::vector<CheckResult> out;
  const CycNum one(1L), minus(-1L);
  auto add = [&](const std::string& id, Params p, const std::vector<TraceStep>& steps,
                 const std::vector<TraceStep>& omegas) {
    const HdetResult h = hdet_from_trace(hypersurface_trace(steps, omegas), 2);
    out.push_back(make_check("table2." + id, p, minus, h.value));
    out.push_back(make_check("table2." + id + ".product", std::move(p), minus, hdet_product(steps, omegas)));
  };
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const Params p{{"n", ll(n)}};
    add("A1", p, {{1, one}, {1, minus}}, {});
    add("A2", p, {{2 * n, one}, {2 * n, one}, {2, minus}}, {{4 * n, one}});
    if (n % 2 == 1) add("A3", p, {{n, minus}, {n, one}, {2, minus}}, {{2 * n, minus}});
    add("A4", p, {{2 * n, minus}, {2 * n, minus}, {2, minus}}, {{4 * n, one}});
    add("A5", p, {{n, one}, {n, minus}, {2, one}}, {{2 * n, one}});
  }
  for (std::uint64_t n = 4; n <= 8; ++n) {
    const Params p{{"n", ll(n)}};
    add("D1", p, {{2 * (n - 1), one}, {2 * (n - 2), minus}, {4, one}}, {{4 * (n - 1), one}});
    add("D2", p, {{2 * (n - 1), minus}, {2 * (n - 2), one}, {4, one}}, {{4 * (n - 1), one}});
  }
  add("E6.1", {}, {{12, minus}, {8, one}, {6, one}}, {{24, one}});
  add("E6.2", {}, {{12, one}, {8, one}, {6, minus}}, {{24, one}});
  add("E7", {}, {{18, minus}, {12, one}, {8, one}}, {{36, one}});
  add("E8", {}, {{30, minus}, {20, one}, {12, one}}, {{60, one}});
  return out;
}

std::vector<CheckResult> reproduce_table4(std::uint64_t max_n) {
  struct Row {
    int family;
    bool (*admissible)(std::uint64_t);
    bool bireflections;
    bool (*cyclotomic)(std::uint64_t);
  };
  const auto any = +[](std::uint64_t) { return true; };
  const auto even = +[](std::uint64_t n) { return n % 2 == 0; };
  const auto odd = +[](std::uint64_t n) { return n % 2 == 1; };
  const auto four = +[](std::uint64_t n) { return n % 4 == 0; };
  const auto yes = +[](std::uint64_t) { return true; };
  const auto no = +[](std::uint64_t) { return false; };
  const auto only_one = +[](std::uint64_t n) { return n == 1; };
  const Row rows[] = {{1, any, true, yes},  {2, even, true, yes}, {3, odd, true, only_one}, {4, any, false, no},
                      {5, even, true, yes}, {6, any, true, yes},  {7, even, true, yes},     {8, four, true, yes}};

  std::vector<CheckResult> out;
  const auto run = [&](const Row& row, std::uint64_t n, const Rat& alpha, const Rat& beta, bool stated) {
    const Theorem03Report r = theorem03_report(alpha, beta, q_family_generators(row.family, n));
    const std::string id = std::string(stated ? "table4.Q" : "table4.observed.Q") + std::to_string(row.family);
    out.push_back(make_check(id, {{"n", ll(n)}}, std::vector<bool>{row.bireflections, row.cyclotomic(n)},
                             std::vector<bool>{r.generated_by_bireflections, r.cyclotomic},
                             "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " |H|=" +
                                 std::to_string(r.group.order())));
  };
  for (const Row& row : rows) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const bool stated = row.admissible(n);
      if (row.family == 3 && !stated) continue;
      if (row.family <= 4) {
        run(row, n, 1, 1, stated);
      } else {
        run(row, n, 3, -1, stated);
        run(row, n, -2, -1, stated);
      }
    }
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"all", "example82", "example83", "lemma84", "lemma86", "lemma87",
          "threevar", "case21", "example59", "table2", "table4"};
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t max_n) {
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = name == "all";
  bool known = all;
  if (all || name == "example82") {
    known = true;
    for (std::uint64_t n = 2; n <= std::max<std::uint64_t>(max_n, 2); ++n) out.push_back(check_example82(n));
    out.push_back(check_example82(5, 0, 2));
  }
  if (all || name == "example83") {
    known = true;
    for (std::uint64_t n = 1; n <= max_n; ++n) append(check_example83(n));
  }
  if (all || name == "lemma84") {
    known = true;
    for (std::uint64_t n = 1; n <= max_n; n += 2) append(check_lemma84(n));
  }
  if (all || name == "lemma86") {
    known = true;
    append(sweep_lemma86(max_n));
  }
  if (all || name == "lemma87") {
    known = true;
    for (std::uint64_t n = 1; n <= max_n; ++n) append(check_lemma87(n));
  }
  if (all || name == "threevar") {
    known = true;
    for (std::uint64_t n = 3; n <= std::max<std::uint64_t>(max_n, 3); n += 2) append(check_three_variable(n));
  }
  if (all || name == "case21") {
    known = true;
    append(check_case21());
  }
  if (all || name == "example59") {
    known = true;
    for (auto [v, w] : {std::pair<std::uint64_t, std::uint64_t>{1, 1}, {1, 2}, {2, 3}}) append(check_example59(v, w));
  }
  if (all || name == "table2") {
    known = true;
    append(check_table2_hdet(std::max<std::uint64_t>(max_n, 1)));
  }
  if (all || name == "table4") {
    known = true;
    append(reproduce_table4(max_n));
  }
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return out;
}

}  // namespace dupinv
