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

#include "dupinv/group.hpp"

#include <numeric>
#include <unordered_set>

#include "dupinv/numtheory.hpp"

namespace dupinv {

bool MatGroup::contains(const Mat2& g) const {
  for (const Mat2& e : elements) {
    if (e == g) return true;
  }
  return false;
}

MatGroup close_group(const std::vector<Mat2>& generators, std::size_t cap) {
  for (const Mat2& g : generators) {
    if (g.det().is_zero()) throw Error(ErrorCode::SingularGenerator, "generator " + g.to_string() + " is singular");
  }
  MatGroup h;
  h.generators = generators;
  h.elements = close_elements(generators, Mat2::identity(), cap);
  return h;
}

std::vector<CycNum> det_values(const MatGroup& h) {
  std::vector<CycNum> out;
  for (const Mat2& g : h.elements) {
    CycNum d = g.det();
    bool seen = false;
    for (const CycNum& x : out) seen = seen || x == d;
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

MatGroup sl2_part(const MatGroup& h) {
  MatGroup out;
  for (const Mat2& g : h.elements) {
    if (g.det().is_one()) out.elements.push_back(g);
  }
  out.generators = out.elements;
  return out;
}

bool det_maps_onto_signs(const MatGroup& h) {
  const auto dets = det_values(h);
  if (dets.size() != 2) return false;
  bool plus = false, minus = false;
  for (const CycNum& d : dets) {
    plus = plus || d == CycNum(1L);
    minus = minus || d == CycNum(-1L);
  }
  return plus && minus;
}

bool is_subset_of_sl2(const MatGroup& h) {
  for (const Mat2& g : h.elements) {
    if (!g.det().is_one()) return false;
  }
  return true;
}

bool is_monomial_group(const MatGroup& h) {
  for (const Mat2& g : h.elements) {
    if (!g.is_diagonal() && !g.is_antidiagonal()) return false;
  }
  return true;
}

bool same_elements(const MatGroup& a, const MatGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() == 0) return true;
  const std::uint64_t n = common_conductor(a.elements[0].conductor(), b.elements[0].conductor());
  std::unordered_multimap<std::size_t, Mat2> index;
  for (const Mat2& g : b.elements) {
    Mat2 p = g.promote(n);
    index.emplace(p.raw_hash(), std::move(p));
  }
  for (const Mat2& g : a.elements) {
    const Mat2 p = g.promote(n);
    auto [lo, hi] = index.equal_range(p.raw_hash());
    bool found = false;
    for (auto it = lo; it != hi && !found; ++it) found = it->second == p;
    if (!found) return false;
  }
  return true;
}

namespace {

RootOfUnity require_root(const CycNum& x) {
  auto r = root_of_unity_log(x);
  if (!r) throw Error(ErrorCode::InfiniteOrderSuspected, x.to_string() + " is not a root of unity");
  return *r;
}

Eigenpair make_pair(std::uint64_t m, std::uint64_t k1, std::uint64_t k2) {
  k1 %= m;
  k2 %= m;
  const std::uint64_t g = std::gcd(m, std::gcd(k1, k2));
  m /= g;
  k1 /= g;
  k2 /= g;
  if (k1 > k2) std::swap(k1, k2);
  return {m, k1, k2, CycNum::zeta(m, static_cast<std::int64_t>(k1)),
          CycNum::zeta(m, static_cast<std::int64_t>(k2))};
}

}  // namespace

Eigenpair eigenvalues(const Mat2& g) {
  if (g.is_diagonal()) {
    const RootOfUnity x = require_root(g.a11);
    const RootOfUnity y = require_root(g.a22);
    const std::uint64_t m = std::lcm(x.order, y.order);
    return make_pair(m, x.power * (m / x.order), y.power * (m / y.order));
  }
  if (g.is_antidiagonal()) {
    // lambda^2 = a12 a21.
    const RootOfUnity x = require_root(g.a12 * g.a21);
    const std::uint64_t m = 2 * x.order;
    return make_pair(m, x.power, x.power + x.order);
  }
  const std::uint64_t m = element_order(g);
  const RootOfUnity d = require_root(g.det());
  const std::uint64_t kd = d.power * (m / d.order);
  const std::uint64_t n = common_conductor(m, g.conductor());
  const CycNum tr = g.trace().promote(n);
  std::vector<CycNum> powers;
  powers.reserve(m);
  const CycNum z = CycNum::zeta(m).promote(n);
  CycNum cur = CycNum(1L).promote(n);
  for (std::uint64_t k = 0; k < m; ++k) {
    powers.push_back(cur);
    cur = cur * z;
  }
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t other = (kd + m - k) % m;
    if (powers[k] + powers[other] == tr) return make_pair(m, k, other);
  }
  throw Error(ErrorCode::InfiniteOrderSuspected, "no root of unity eigenvalues for " + g.to_string());
}

std::uint64_t element_order(const Mat2& g, std::size_t cap) {
  if (g.is_diagonal() || g.is_antidiagonal()) {
    if (g.det().is_zero()) throw Error(ErrorCode::InfiniteOrderSuspected, "singular matrix");
    return eigenvalues(g).order;
  }
  const Mat2 base = g.promote(g.conductor());
  Mat2 p = base;
  std::uint64_t k = 1;
  while (!p.is_identity()) {
    if (++k > cap) throw Error(ErrorCode::InfiniteOrderSuspected, "powers of " + g.to_string() + " exceed the cap");
    p = p * base;
  }
  return k;
}

std::vector<Mat2> q_family_generators(int family, std::uint64_t n, int variant) {
  const Mat2 swap = variant == 0 ? mat_s() : mat_s1();
  switch (family) {
    case 1: return {mat_c(CycNum::zeta(n))};
    case 2: return {mat_d1(), mat_c(CycNum::zeta(2 * n))};
    case 3: return {mat_d1(), mat_c(CycNum::zeta(n))};
    case 4: return {mat_c_minus(CycNum::zeta(4 * n))};
    case 5: return {mat_s1(), mat_c(CycNum::zeta(2 * n))};
    case 6: return {mat_s(), mat_c(CycNum::zeta(n))};
    case 7: return {mat_d1(), swap, mat_c(CycNum::zeta(2 * n))};
    case 8: return {swap, mat_c_minus(CycNum::zeta(4 * n))};
    default: throw Error(ErrorCode::InvalidArgument, "family index must be 1..8");
  }
}

std::uint64_t q_family_order(int family, std::uint64_t n) {
  static constexpr std::uint64_t kFactor[] = {0, 1, 4, 2, 4, 4, 2, 8, 8};
  if (family < 1 || family > 8) throw Error(ErrorCode::InvalidArgument, "family index must be 1..8");
  return kFactor[family] * n;
}

std::string label_display(const std::string& family, std::optional<std::uint64_t> n) {
  const std::string p = n ? std::to_string(*n) : "n";
  if (family.size() == 2 && family[0] == 'Q') return family + "(n=" + p + ")";
  if (family == "C" || family == "BD" || family == "D") return family + "_" + p;
  if (family.size() == 2 && family[0] == 'A') return "A_{" + p + "," + family.substr(1) + "}";
  return family;
}

std::string GroupLabel::display() const { return label_display(family, n); }

namespace {

MatGroup swap_conjugate(const MatGroup& h) {
  const Mat2 s = mat_s();
  MatGroup out;
  for (const Mat2& g : h.generators) out.generators.push_back(s * g * s);
  for (const Mat2& g : h.elements) out.elements.push_back(s * g * s);
  return out;
}

bool matches_family(const MatGroup& h, const MatGroup& swapped, int family, std::uint64_t n) {
  const int variants = family >= 7 ? 2 : 1;
  for (int v = 0; v < variants; ++v) {
    const MatGroup q = close_group(q_family_generators(family, n, v));
    if (same_elements(h, q) || same_elements(swapped, q)) return true;
  }
  return false;
}

bool is_cyclic(const MatGroup& h) {
  for (const Mat2& g : h.elements) {
    if (element_order(g) == h.order()) return true;
  }
  return false;
}

bool has_element_of_order(const MatGroup& h, std::uint64_t k) {
  for (const Mat2& g : h.elements) {
    if (element_order(g) == k) return true;
  }
  return false;
}

}  // namespace

GroupLabel classify(const MatGroup& h) {
  GroupLabel label;
  const std::uint64_t order = h.order();
  std::vector<std::pair<std::string, std::optional<std::uint64_t>>> matches;

  if (is_monomial_group(h)) {
    const MatGroup swapped = swap_conjugate(h);
    for (int family = 1; family <= 8; ++family) {
      const std::uint64_t unit = q_family_order(family, 1);
      if (order % unit != 0) continue;
      const std::uint64_t n = order / unit;
      if (n == 0 || (family == 3 && n % 2 == 0)) continue;
      if (matches_family(h, swapped, family, n)) matches.emplace_back("Q" + std::to_string(family), n);
    }
  }
  const std::size_t q_matches = matches.size();

  if (is_subset_of_sl2(h)) {
    if (is_cyclic(h)) {
      matches.emplace_back("C", order);
    } else if (order % 4 == 0 && has_element_of_order(h, order / 2)) {
      matches.emplace_back("BD", order);
    } else if (order == 24) {
      matches.emplace_back("BT24", std::nullopt);
    } else if (order == 48) {
      matches.emplace_back("BO48", std::nullopt);
    } else if (order == 120) {
      matches.emplace_back("BI120", std::nullopt);
    }
  }

  // Cyclic SL2 part companions.
  for (std::size_t i = 0; i < q_matches; ++i) {
    const auto [fam, n] = matches[i];
    if (fam == "Q3" && n == 1) matches.emplace_back("A1", std::nullopt);
    if (fam == "Q2") matches.emplace_back("A2", n);
    if (fam == "Q3") matches.emplace_back("A3", n);
    if (fam == "Q4") matches.emplace_back("A4", n);
    if (fam == "Q6") {
      matches.emplace_back("A5", n);
      matches.emplace_back("D", 2 * *n);
    }
  }

  for (const auto& [fam, n] : matches) label.all_matches.push_back(label_display(fam, n));
  if (matches.empty()) {
    label.family = "Unrecognized";
    label.all_matches.push_back("Unrecognized");
  } else {
    label.family = matches[0].first;
    label.n = matches[0].second;
  }
  return label;
}

}  // namespace dupinv
