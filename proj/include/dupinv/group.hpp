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
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dupinv/error.hpp"
#include "dupinv/matrix.hpp"

namespace dupinv {

inline constexpr std::size_t kGroupCap = 10000;

struct MatGroup {
  std::vector<Mat2> generators;
  // Breadth-first insertion order, identity first. All entries share one
  // conductor.
  std::vector<Mat2> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Mat2& g) const;
};

// Breadth-first closure. Element type needs operator*, operator==,
// promote(), conductor(), raw_hash() and is_identity().
template <class M>
std::vector<M> close_elements(const std::vector<M>& gens, const M& identity, std::size_t cap) {
  std::uint64_t n = identity.conductor();
  for (const M& g : gens) n = common_conductor(n, g.conductor());
  std::vector<M> promoted;
  promoted.reserve(gens.size());
  for (const M& g : gens) promoted.push_back(g.promote(n));

  // Powers of each generator must return to the identity under the cap.
  for (const M& g : promoted) {
    M p = g;
    std::size_t k = 1;
    while (!p.is_identity()) {
      if (++k > cap) {
        throw Error(ErrorCode::InfiniteOrderSuspected, "generator powers exceed the closure cap");
      }
      p = p * g;
    }
  }

  std::vector<M> elements{identity.promote(n)};
  std::unordered_multimap<std::size_t, std::size_t> seen{{elements[0].raw_hash(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const M& g : promoted) {
      M y = elements[head] * g;
      const std::size_t h = y.raw_hash();
      bool found = false;
      auto [lo, hi] = seen.equal_range(h);
      for (auto it = lo; it != hi && !found; ++it) found = elements[it->second] == y;
      if (found) continue;
      if (elements.size() >= cap) throw Error(ErrorCode::GroupTooLarge, "group exceeds the closure cap");
      seen.emplace(h, elements.size());
      elements.push_back(std::move(y));
    }
  }
  return elements;
}

// Throws SingularGenerator, GroupTooLarge, InfiniteOrderSuspected.
MatGroup close_group(const std::vector<Mat2>& generators, std::size_t cap = kGroupCap);

// Distinct determinants in order of first appearance.
std::vector<CycNum> det_values(const MatGroup& h);
MatGroup sl2_part(const MatGroup& h);
// det maps H onto {1, -1}.
bool det_maps_onto_signs(const MatGroup& h);
bool is_subset_of_sl2(const MatGroup& h);
// Every element diagonal or antidiagonal.
bool is_monomial_group(const MatGroup& h);
bool same_elements(const MatGroup& a, const MatGroup& b);

// Throws InfiniteOrderSuspected past the cap.
std::uint64_t element_order(const Mat2& g, std::size_t cap = kGroupCap);

// Eigenvalues zeta_m^k1, zeta_m^k2 of a finite order matrix, m its order,
// ordered so that k1 <= k2.
struct Eigenpair {
  std::uint64_t order;
  std::uint64_t k1, k2;
  CycNum first, second;
};
Eigenpair eigenvalues(const Mat2& g);

// Generators of Q_i(n) in the normal form used by classification. variant 1
// picks s1 instead of s for Q7 and Q8.
std::vector<Mat2> q_family_generators(int family, std::uint64_t n, int variant = 0);
// Stated group order of Q_i(n).
std::uint64_t q_family_order(int family, std::uint64_t n);

struct GroupLabel {
  // "Q1".."Q8", "C", "BD", "BT24", "BO48", "BI120", "A1".."A5", "D",
  // or "Unrecognized".
  std::string family;
  std::optional<std::uint64_t> n;
  std::vector<std::string> all_matches;

  std::string display() const;
};

std::string label_display(const std::string& family, std::optional<std::uint64_t> n);
GroupLabel classify(const MatGroup& h);

}  // namespace dupinv
