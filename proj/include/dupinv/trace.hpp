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
#include <utility>
#include <vector>

#include "dupinv/cyclotomic.hpp"
#include "dupinv/ratfunc.hpp"

namespace dupinv {

// One factor 1 - lambda t^degree with lambda a root of unity.
struct TraceFactor {
  std::uint64_t degree;
  RootOfUnity root;

  static TraceFactor make(std::uint64_t degree, const CycNum& lambda);
  static TraceFactor make(std::uint64_t degree, std::uint64_t order, std::uint64_t power);
  CycNum lambda() const { return CycNum::zeta(root.order, static_cast<std::int64_t>(root.power)); }
  bool lambda_is_one() const { return root.order == 1; }
};

// prod (1 - l t^d) over num divided by prod (1 - l t^d) over den, kept in
// factored form until it is averaged or collapsed.
struct TraceSeries {
  std::vector<TraceFactor> den;
  std::vector<TraceFactor> num;

  // Throws Error(NonRationalCollapse) when some coefficient is irrational.
  RatFunc to_ratfunc() const;
  int pole_order_at_one() const;
  // Leading term c t^l of the expansion in 1/t.
  std::pair<int, CycNum> leading_at_infinity() const;
};

using TraceStep = std::pair<std::uint64_t, CycNum>;

TraceSeries normal_sequence_trace(const std::vector<TraceStep>& steps);
TraceSeries hypersurface_trace(const std::vector<TraceStep>& steps, const std::vector<TraceStep>& omegas);

// prod lambda_i over steps, divided by prod lambda over omegas.
CycNum hdet_product(const std::vector<TraceStep>& steps, const std::vector<TraceStep>& omegas = {});

struct HdetResult {
  CycNum value;
  int as_index_exponent;
};
// (-1)^d / c for the leading term c t^l at infinity.
HdetResult hdet_from_trace(const TraceSeries& tr, unsigned d);
HdetResult hdet_from_trace(const RatFunc& tr, unsigned d);

// (1/|terms|) sum of the terms, collapsed to an integer rational function.
// All terms must have the same multiset of denominator degrees.
RatFunc molien_average(const std::vector<TraceSeries>& terms);

}  // namespace dupinv
