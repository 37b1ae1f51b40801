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

#include "dupinv/invariants.hpp"

#include <numeric>

#include "dupinv/error.hpp"

namespace dupinv {

std::string to_string(AutShape shape) {
  switch (shape) {
    case AutShape::FullGL2: return "GL2";
    case AutShape::U: return "U";
    case AutShape::O: return "O";
  }
  return "?";
}

AutShape downup_aut_shape(const Rat& alpha, const Rat& beta) {
  if ((alpha == 0 && beta == 1) || (alpha == 2 && beta == -1)) return AutShape::FullGL2;
  if (beta == -1) return AutShape::U;
  return AutShape::O;
}

AlgebraCtx AlgebraCtx::down_up(const Rat& alpha, const Rat& beta) {
  if (beta == 0) throw Error(ErrorCode::InvalidArgument, "down-up algebra needs beta != 0");
  AlgebraCtx ctx;
  ctx.kind = AlgebraKind::DownUp;
  ctx.alpha = alpha;
  ctx.beta = beta;
  return ctx;
}

AlgebraCtx AlgebraCtx::skew_plane(const CycNum& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "skew plane needs q != 0");
  AlgebraCtx ctx;
  ctx.kind = AlgebraKind::SkewPlane;
  ctx.q = q;
  return ctx;
}

AlgebraCtx AlgebraCtx::jordan_plane() {
  AlgebraCtx ctx;
  ctx.kind = AlgebraKind::JordanPlane;
  return ctx;
}

AlgebraCtx AlgebraCtx::weighted_poly(std::vector<unsigned> weights) {
  if (weights.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial ring needs at least one variable");
  for (unsigned w : weights) {
    if (w == 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  }
  AlgebraCtx ctx;
  ctx.kind = AlgebraKind::WeightedPoly;
  ctx.weights = std::move(weights);
  return ctx;
}

unsigned AlgebraCtx::gkdim() const {
  switch (kind) {
    case AlgebraKind::DownUp: return 3;
    case AlgebraKind::SkewPlane:
    case AlgebraKind::JordanPlane: return 2;
    case AlgebraKind::WeightedPoly: return static_cast<unsigned>(weights.size());
  }
  return 0;
}

AutShape AlgebraCtx::aut_shape() const {
  switch (kind) {
    case AlgebraKind::DownUp: return downup_aut_shape(alpha, beta);
    case AlgebraKind::SkewPlane:
      if (q.is_one()) return AutShape::FullGL2;
      if (q == CycNum(-1L)) return AutShape::U;
      return AutShape::O;
    case AlgebraKind::JordanPlane: return AutShape::O;
    case AlgebraKind::WeightedPoly: return AutShape::FullGL2;
  }
  return AutShape::O;
}

bool AlgebraCtx::admits(const Mat2& g) const {
  if (g.det().is_zero()) return false;
  switch (aut_shape()) {
    case AutShape::FullGL2: return true;
    case AutShape::U: return g.is_diagonal() || g.is_antidiagonal();
    case AutShape::O: return g.is_diagonal();
  }
  return false;
}

std::string AlgebraCtx::describe() const {
  switch (kind) {
    case AlgebraKind::DownUp: return "A(" + to_string(alpha) + "," + to_string(beta) + ")";
    case AlgebraKind::SkewPlane: return "k_q[x,y], q=" + q.to_string();
    case AlgebraKind::JordanPlane: return "k_J[x,y]";
    case AlgebraKind::WeightedPoly: return "k[x1..x" + std::to_string(weights.size()) + "]";
  }
  return "?";
}

void require_automorphism(const AlgebraCtx& ctx, const Mat2& g) {
  if (!ctx.admits(g)) {
    throw Error(ErrorCode::NotAnAutomorphism,
                g.to_string() + " is not a graded automorphism of " + ctx.describe() + " (shape " +
                    to_string(ctx.aut_shape()) + ")");
  }
}

TraceSeries downup_trace(const Mat2& g) {
  const Eigenpair e = eigenvalues(g);
  TraceSeries tr;
  tr.den.push_back(TraceFactor::make(1, e.order, e.k1));
  tr.den.push_back(TraceFactor::make(1, e.order, e.k2));
  tr.den.push_back(TraceFactor::make(2, e.order, e.k1 + e.k2));
  return tr;
}

TraceSeries downup_trace(const AlgebraCtx& ctx, const Mat2& g) {
  require_automorphism(ctx, g);
  return downup_trace(g);
}

TraceSeries plane_trace(const AlgebraCtx& ctx, const Mat2& g) {
  TraceSeries tr;
  if (ctx.kind == AlgebraKind::JordanPlane) {
    if (!g.is_diagonal() || !(g.a11 == g.a22)) {
      throw Error(ErrorCode::UnsupportedAutomorphism, "Jordan plane traces need a scalar matrix");
    }
    const TraceFactor f = TraceFactor::make(1, g.a11);
    tr.den = {f, f};
    return tr;
  }
  if (ctx.kind != AlgebraKind::SkewPlane) {
    throw Error(ErrorCode::InvalidArgument, "plane_trace needs a plane");
  }
  if (g.det().is_zero()) throw Error(ErrorCode::NotAnAutomorphism, "singular matrix");
  if (g.is_diagonal() || ctx.q.is_one()) {
    const Eigenpair e = eigenvalues(g);
    tr.den.push_back(TraceFactor::make(1, e.order, e.k1));
    tr.den.push_back(TraceFactor::make(1, e.order, e.k2));
    return tr;
  }
  if (ctx.q == CycNum(-1L) && g.is_antidiagonal()) {
    // Only x^i y^i contributes: 1 / (1 - det(g) t^2) = 1 / ((1 - r t)(1 + r t)).
    const auto d = root_of_unity_log(g.det());
    if (!d) throw Error(ErrorCode::InfiniteOrderSuspected, "determinant is not a root of unity");
    const std::uint64_t m = 2 * d->order;
    tr.den.push_back(TraceFactor::make(1, m, d->power));
    tr.den.push_back(TraceFactor::make(1, m, d->power + d->order));
    return tr;
  }
  throw Error(ErrorCode::UnsupportedAutomorphism,
              "non-diagonal automorphism of a skew plane with q != 1, -1");
}

TraceSeries trace_of(const AlgebraCtx& ctx, const Mat2& g) {
  switch (ctx.kind) {
    case AlgebraKind::DownUp: return downup_trace(ctx, g);
    case AlgebraKind::SkewPlane:
      require_automorphism(ctx, g);
      return plane_trace(ctx, g);
    case AlgebraKind::JordanPlane: return plane_trace(ctx, g);
    case AlgebraKind::WeightedPoly: break;
  }
  throw Error(ErrorCode::InvalidArgument, "use polyring_trace for polynomial rings");
}

CycNum hdet_matrix(const Mat2& g) {
  const CycNum d = g.det();
  return d * d;
}

RatFunc molien(const AlgebraCtx& ctx, const MatGroup& h) {
  std::vector<TraceSeries> terms;
  terms.reserve(h.order());
  for (const Mat2& g : h.elements) terms.push_back(trace_of(ctx, g));
  return molien_average(terms);
}

bool is_quasi_reflection(const AlgebraCtx& ctx, const Mat2& g) {
  if (g.is_identity()) return false;
  return trace_of(ctx, g).pole_order_at_one() == static_cast<int>(ctx.gkdim()) - 1;
}

bool is_bireflection(const AlgebraCtx& ctx, const Mat2& g, BireflectionRule rule) {
  if (g.is_identity()) return false;
  const int k = trace_of(ctx, g).pole_order_at_one();
  const int n = static_cast<int>(ctx.gkdim());
  if (rule == BireflectionRule::Strict) return k == n - 2;
  return k == n - 2 || k == n - 1;
}

bool downup_matrix_bireflection(const Mat2& g) {
  if (g.is_identity()) return false;
  if (g.det().is_one()) return true;
  const Eigenpair e = eigenvalues(g);
  return e.k1 == 0 || e.k2 == 0;
}

MatGroup bireflection_subgroup(const AlgebraCtx& ctx, const MatGroup& h, BireflectionRule rule) {
  std::vector<Mat2> gens;
  for (const Mat2& g : h.elements) {
    if (is_bireflection(ctx, g, rule)) gens.push_back(g);
  }
  return close_group(gens);
}

bool generated_by_bireflections(const AlgebraCtx& ctx, const MatGroup& h, BireflectionRule rule) {
  return bireflection_subgroup(ctx, h, rule).order() == h.order();
}

Theorem03Report theorem03_report(const AlgebraCtx& ctx, const MatGroup& h) {
  Theorem03Report r;
  r.algebra = ctx;
  r.aut_shape = ctx.aut_shape();
  r.group = h;
  r.group_label = classify(h);

  std::vector<TraceSeries> traces;
  traces.reserve(h.order());
  r.hdet_trivial = true;
  std::vector<Mat2> birefl;
  for (const Mat2& g : h.elements) {
    traces.push_back(trace_of(ctx, g));
    const HdetResult hd = hdet_from_trace(traces.back(), ctx.gkdim());
    if (!hd.value.is_one()) r.hdet_trivial = false;
    if (g.is_identity()) continue;
    const int k = traces.back().pole_order_at_one();
    const int n = static_cast<int>(ctx.gkdim());
    if (k == n - 2 || k == n - 1) birefl.push_back(g);
  }
  r.gorenstein_by_hdet = r.hdet_trivial;
  r.hilbert_series = molien_average(traces);

  const auto st = stanley_gorenstein_test(r.hilbert_series);
  r.gorenstein_by_stanley = st.has_value();
  if (st) r.as_index = st->index;

  const IntPoly numer = r.hilbert_series.num().primitive_part();
  r.cyclotomic_factors = is_cyclotomic_product(numer);
  r.cyclotomic = r.cyclotomic_factors.has_value();
  if (!r.cyclotomic) r.noncyclotomic_witness = r.hilbert_series.num();

  r.bireflection_count = birefl.size();
  r.generated_by_bireflections = close_group(birefl).order() == h.order();

  r.C3 = r.gorenstein_by_hdet && r.cyclotomic;
  r.C2 = r.C3 && r.generated_by_bireflections;
  r.consistent = r.C2 == r.C3;
  return r;
}

Theorem03Report theorem03_report(const Rat& alpha, const Rat& beta, const std::vector<Mat2>& generators) {
  const AlgebraCtx ctx = AlgebraCtx::down_up(alpha, beta);
  for (const Mat2& g : generators) require_automorphism(ctx, g);
  return theorem03_report(ctx, close_group(generators));
}

TraceSeries polyring_trace(const MatN& g, const std::vector<unsigned>& weights) {
  const std::size_t n = g.size();
  if (!g.is_monomial()) throw Error(ErrorCode::NonMonomialMatrix, "matrix is not monomial");
  std::vector<unsigned> w = weights.empty() ? std::vector<unsigned>(n, 1) : weights;
  if (w.size() != n) throw Error(ErrorCode::InvalidArgument, "weight count does not match matrix size");
  std::vector<std::size_t> target(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.at(i, j).is_zero()) target[i] = j;
    }
  }
  TraceSeries tr;
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    CycNum p(1L);
    std::uint64_t len = 0;
    std::size_t i = start;
    while (!done[i]) {
      done[i] = true;
      if (w[i] != w[start]) throw Error(ErrorCode::InvalidArgument, "permuted variables need equal weights");
      p *= g.at(i, target[i]);
      i = target[i];
      ++len;
    }
    // The cycle contributes the len-th roots of p.
    const auto r = root_of_unity_log(p);
    if (!r) throw Error(ErrorCode::InfiniteOrderSuspected, "matrix has infinite order");
    for (std::uint64_t k = 0; k < len; ++k) {
      tr.den.push_back(TraceFactor::make(w[start], len * r->order, r->power + k * r->order));
    }
  }
  return tr;
}

RatFunc polyring_molien(const std::vector<MatN>& generators, const std::vector<unsigned>& weights) {
  if (generators.empty() && weights.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need a generator or a weight vector");
  }
  const std::size_t n = generators.empty() ? weights.size() : generators[0].size();
  if (n == 0 || n > 4) throw Error(ErrorCode::InvalidArgument, "polynomial rings of 1 to 4 variables");
  for (const MatN& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::InvalidArgument, "generator sizes differ");
    if (!g.is_monomial()) throw Error(ErrorCode::NonMonomialMatrix, "generator is not monomial");
  }
  const auto elements = close_elements(generators, MatN::identity(n), kGroupCap);
  std::vector<TraceSeries> terms;
  terms.reserve(elements.size());
  for (const MatN& g : elements) terms.push_back(polyring_trace(g, weights));
  return molien_average(terms);
}

}  // namespace dupinv
