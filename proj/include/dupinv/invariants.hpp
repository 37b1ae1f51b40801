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

#include <optional>
#include <string>
#include <vector>

#include "dupinv/group.hpp"
#include "dupinv/poly.hpp"
#include "dupinv/ratfunc.hpp"
#include "dupinv/trace.hpp"

namespace dupinv {

enum class AlgebraKind { DownUp, SkewPlane, JordanPlane, WeightedPoly };
enum class AutShape { FullGL2, U, O };

std::string to_string(AutShape shape);

// Graded automorphism group shape of the down-up algebra A(alpha, beta).
AutShape downup_aut_shape(const Rat& alpha, const Rat& beta);

struct AlgebraCtx {
  AlgebraKind kind = AlgebraKind::DownUp;
  Rat alpha, beta;
  CycNum q;
  std::vector<unsigned> weights;

  // Throws InvalidArgument when beta = 0.
  static AlgebraCtx down_up(const Rat& alpha, const Rat& beta);
  static AlgebraCtx skew_plane(const CycNum& q);
  static AlgebraCtx jordan_plane();
  static AlgebraCtx weighted_poly(std::vector<unsigned> weights);

  unsigned gkdim() const;
  Rat discriminant() const { return alpha * alpha + 4 * beta; }
  // Skew plane: FullGL2 at q = 1, U at q = -1, O otherwise. Jordan plane: O,
  // further restricted to scalars by plane_trace.
  AutShape aut_shape() const;
  bool admits(const Mat2& g) const;
  std::string describe() const;
};

// Throws NotAnAutomorphism unless ctx admits g.
void require_automorphism(const AlgebraCtx& ctx, const Mat2& g);

// 1 / ((1 - l t)(1 - m t)(1 - l m t^2)) for eigenvalues l, m of g.
TraceSeries downup_trace(const Mat2& g);
TraceSeries downup_trace(const AlgebraCtx& ctx, const Mat2& g);
TraceSeries plane_trace(const AlgebraCtx& ctx, const Mat2& g);
// Dispatches on ctx.kind for the two-variable actions.
TraceSeries trace_of(const AlgebraCtx& ctx, const Mat2& g);

CycNum hdet_matrix(const Mat2& g);

RatFunc molien(const AlgebraCtx& ctx, const MatGroup& h);

enum class BireflectionRule { IncludeReflections, Strict };

bool is_quasi_reflection(const AlgebraCtx& ctx, const Mat2& g);
bool is_bireflection(const AlgebraCtx& ctx, const Mat2& g,
                     BireflectionRule rule = BireflectionRule::IncludeReflections);
// Down-up matrix test: g != I and (det g = 1 or 1 is an eigenvalue).
bool downup_matrix_bireflection(const Mat2& g);

MatGroup bireflection_subgroup(const AlgebraCtx& ctx, const MatGroup& h,
                               BireflectionRule rule = BireflectionRule::IncludeReflections);
bool generated_by_bireflections(const AlgebraCtx& ctx, const MatGroup& h,
                                BireflectionRule rule = BireflectionRule::IncludeReflections);

struct Theorem03Report {
  AlgebraCtx algebra;
  AutShape aut_shape;
  MatGroup group;
  GroupLabel group_label;
  bool hdet_trivial = false;
  bool gorenstein_by_hdet = false;
  bool gorenstein_by_stanley = false;
  std::optional<int> as_index;
  RatFunc hilbert_series;
  bool cyclotomic = false;
  std::optional<CycFactorization> cyclotomic_factors;
  std::optional<IntPoly> noncyclotomic_witness;
  std::size_t bireflection_count = 0;
  bool generated_by_bireflections = false;
  bool C2 = false;
  bool C3 = false;
  bool consistent = false;
};

Theorem03Report theorem03_report(const Rat& alpha, const Rat& beta, const std::vector<Mat2>& generators);
Theorem03Report theorem03_report(const AlgebraCtx& ctx, const MatGroup& h);

// Molien series of a group of monomial matrices acting on a polynomial ring
// with the given generator weights (all 1 when empty).
RatFunc polyring_molien(const std::vector<MatN>& generators, const std::vector<unsigned>& weights = {});
TraceSeries polyring_trace(const MatN& g, const std::vector<unsigned>& weights);

}  // namespace dupinv
