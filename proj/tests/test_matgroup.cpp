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


#include <algorithm>

#include "doctest.h"

#include "dupinv/error.hpp"
#include "dupinv/group.hpp"

using namespace dupinv;

namespace {

CycNum z(std::uint64_t n, std::int64_t k = 1) { return CycNum::zeta(n, k); }

bool has_match(const GroupLabel& l, const std::string& s) {
  return std::find(l.all_matches.begin(), l.all_matches.end(), s) != l.all_matches.end();
}

std::vector<MatGroup> sweep_groups() {
  std::vector<MatGroup> out;
  for (int family = 1; family <= 8; ++family) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      if (family == 3 && n % 2 == 0) continue;
      out.push_back(close_group(q_family_generators(family, n)));
    }
  }
  for (std::uint64_t m = 1; m <= 12; ++m) out.push_back(close_group({mat_c(z(m))}));
  for (std::uint64_t m = 1; m <= 6; ++m) out.push_back(close_group({mat_s1(), mat_c(z(2 * m))}));
  return out;
}

ErrorCode code_of(const std::vector<Mat2>& gens, std::size_t cap = kGroupCap) {
  try {
    close_group(gens, cap);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("closure") {
  CHECK(close_group({mat_c(z(3))}).order() == 3);
  CHECK(close_group({mat_s1(), mat_c(z(4))}).order() == 8);
  CHECK(close_group({mat_s(), mat_c(z(3))}).order() == 6);
  CHECK(close_group({}).order() == 1);
  const MatGroup g = close_group({mat_c(z(5))});
  CHECK(g.elements.front().is_identity());
  CHECK(g.contains(mat_c(z(5, 3))));
  CHECK_FALSE(g.contains(mat_s()));
}

TEST_CASE("closure errors") {
  CHECK(code_of({Mat2{1L, 0L, 0L, 0L}}) == ErrorCode::SingularGenerator);
  CHECK(code_of({mat_diag(CycNum(2), CycNum(Rat(1, 2)))}) == ErrorCode::InfiniteOrderSuspected);
  CHECK(code_of({Mat2{1L, 1L, 0L, 1L}}) == ErrorCode::InfiniteOrderSuspected);
  CHECK(code_of({mat_c(z(7)), mat_s()}, 10) == ErrorCode::GroupTooLarge);
}

TEST_CASE("Lagrange") {
  const std::vector<std::vector<Mat2>> small = {
      {mat_c(z(4))}, {mat_s1()}, {mat_d1()}, {mat_c(z(3))}, {mat_s()}};
  const std::vector<Mat2> extra = {mat_c(z(12)), mat_s(), mat_d1(), mat_s1()};
  for (const auto& gens : small) {
    const std::size_t a = close_group(gens).order();
    for (const Mat2& x : extra) {
      auto more = gens;
      more.push_back(x);
      CHECK(close_group(more).order() % a == 0);
    }
  }
}

TEST_CASE("element powers and eigenvalues across the sweep") {
  for (const MatGroup& h : sweep_groups()) {
    const auto order = static_cast<std::int64_t>(h.order());
    for (const Mat2& g : h.elements) {
      CHECK(g.pow(order).is_identity());
      const Eigenpair e = eigenvalues(g);
      CHECK(e.first * e.second == g.det());
      CHECK(e.first + e.second == g.trace());
      CHECK(e.k1 <= e.k2);
      CHECK(h.order() % element_order(g) == 0);
    }
  }
}

TEST_CASE("eigenvalue examples") {
  const Eigenpair s = eigenvalues(mat_s());
  CHECK(s.first == CycNum(1));
  CHECK(s.second == CycNum(-1));
  const Eigenpair s1 = eigenvalues(mat_s1());
  CHECK(s1.first == z(4));
  CHECK(s1.second == z(4, 3));
  const Eigenpair d = eigenvalues(mat_diag(z(5), z(5, 2)));
  CHECK(d.first == z(5));
  CHECK(d.second == z(5, 2));
  // conjugate of c_{zeta_6}, neither diagonal nor antidiagonal
  const Mat2 p{1L, 1L, 0L, 1L};
  const Eigenpair e = eigenvalues(p * mat_c(z(6)) * p.inverse());
  CHECK(e.order == 6);
  CHECK(e.first == z(6));
  CHECK(e.second == z(6, 5));
}

TEST_CASE("determinant image") {
  const MatGroup q5 = close_group({mat_s1(), mat_c(z(4))});
  CHECK(det_values(q5) == std::vector<CycNum>{CycNum(1)});
  CHECK_FALSE(det_maps_onto_signs(q5));
  CHECK(is_subset_of_sl2(q5));

  const MatGroup q6 = close_group({mat_s(), mat_c(z(3))});
  const auto d6 = det_values(q6);
  CHECK(d6.size() == 2);
  CHECK(std::find(d6.begin(), d6.end(), CycNum(-1)) != d6.end());
  const MatGroup sl = sl2_part(q6);
  CHECK(sl.order() == 3);
  CHECK(same_elements(sl, close_group({mat_c(z(3))})));
  CHECK(det_maps_onto_signs(q6));

  const MatGroup d3 = close_group({mat_diag(z(3), 1L)});
  CHECK(det_values(d3).size() == 3);
  CHECK_FALSE(det_maps_onto_signs(d3));

  CHECK(det_maps_onto_signs(close_group({mat_d1(), mat_c(z(4))})));
  CHECK_FALSE(det_maps_onto_signs(close_group({mat_c(z(5))})));
}

TEST_CASE("classification examples") {
  const GroupLabel a = classify(close_group({mat_c(z(6)), mat_d1()}));
  CHECK(a.family == "Q2");
  CHECK(a.n == 3u);
  const GroupLabel b = classify(close_group({mat_c(z(5)), mat_d1()}));
  CHECK(b.family == "Q3");
  CHECK(b.n == 5u);
  const GroupLabel c = classify(close_group({mat_s1()}));
  CHECK(c.display() == "Q5(n=1)");
  CHECK(has_match(c, "C_4"));
  const GroupLabel d = classify(close_group({mat_d1()}));
  CHECK(d.display() == "Q3(n=1)");
  CHECK(has_match(d, "A_{n,1}"));
  const GroupLabel e = classify(close_group({mat_c(z(7))}));
  CHECK(e.family == "Q1");
  CHECK(has_match(e, "C_7"));
  const GroupLabel f = classify(close_group({mat_s(), mat_c(z(3))}));
  CHECK(f.family == "Q6");
  CHECK(has_match(f, "D_6"));
  // presented with the two coordinates swapped
  const GroupLabel g = classify(close_group({mat_d2(), mat_c(z(5))}));
  CHECK(g.family == "Q3");
  CHECK(classify(close_group({mat_diag(z(3), 1L)})).family == "Unrecognized");
}

TEST_CASE("SL2 labels") {
  CHECK(classify(close_group({mat_s1(), mat_c(z(4))})).all_matches.back() == "BD_8");
  CHECK(classify(close_group({mat_s1(), mat_c(z(6))})).all_matches.back() == "BD_12");
  CHECK(classify(close_group({mat_c(z(9))})).all_matches.back() == "C_9");
  // binary tetrahedral group: <i, j, (-1 + i + j + k)/2> as quaternion matrices
  const CycNum i = z(4);
  const Mat2 qi = mat_diag(i, -i);
  const Mat2 qj = mat_s1();
  const Mat2 w{Rat(-1, 2) * (CycNum(1) - i), Rat(1, 2) * (CycNum(1) + i),
               Rat(-1, 2) * (CycNum(1) - i), Rat(-1, 2) * (CycNum(1) + i)};
  const MatGroup bt = close_group({qi, qj, w});
  CHECK(bt.order() == 24);
  CHECK(classify(bt).family == "BT24");
}

TEST_CASE("Q8 presented with s or s1") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const MatGroup a = close_group(q_family_generators(8, n, 0));
    const MatGroup b = close_group(q_family_generators(8, n, 1));
    CHECK(a.order() == 8 * n);
    CHECK(b.order() == 8 * n);
    CHECK(classify(a).family == "Q8");
    CHECK(classify(b).family == "Q8");
  }
}

TEST_CASE("Q7 order from closure against the stated order") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (int variant : {0, 1}) {
      const MatGroup h = close_group(q_family_generators(7, n, variant));
      INFO("n = ", n, " variant ", variant);
      CHECK(h.order() == q_family_order(7, n));
      CHECK(classify(h).family == "Q7");
    }
  }
}

TEST_CASE("family orders") {
  for (int family = 1; family <= 8; ++family) {
    for (std::uint64_t n = 1; n <= 8; ++n) {
      if (family == 3 && n % 2 == 0) continue;
      const MatGroup h = close_group(q_family_generators(family, n));
      CHECK(h.order() == q_family_order(family, n));
      CHECK(is_monomial_group(h));
      const GroupLabel l = classify(h);
      CHECK(has_match(l, label_display("Q" + std::to_string(family), n)));
    }
  }
  CHECK_THROWS_AS(q_family_generators(9, 1), Error);
}

TEST_CASE("rendering") {
  CHECK(mat_s1().to_string() == "[[0,1],[-1,0]]");
  CHECK(mat_c(z(8)).to_string() == "[[zeta(8),0],[0,zeta(8)^7]]");
  CHECK(label_display("BD", 8) == "BD_8");
  CHECK(label_display("A2", 3) == "A_{3,2}");
}
