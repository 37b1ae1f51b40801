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

#include "dupinv/trace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "dupinv/error.hpp"
#include "dupinv/numtheory.hpp"

namespace dupinv {

TraceFactor TraceFactor::make(std::uint64_t degree, const CycNum& lambda) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "trace factor degree must be positive");
  auto r = root_of_unity_log(lambda);
  if (!r) throw Error(ErrorCode::InvalidArgument, lambda.to_string() + " is not a root of unity");
  return {degree, *r};
}

TraceFactor TraceFactor::make(std::uint64_t degree, std::uint64_t order, std::uint64_t power) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "trace factor degree must be positive");
  power %= order;
  const std::uint64_t g = std::gcd(order, power);
  return {degree, {order / g, power / g}};
}

TraceSeries normal_sequence_trace(const std::vector<TraceStep>& steps) {
  if (steps.empty()) throw Error(ErrorCode::InvalidArgument, "normal sequence must be nonempty");
  TraceSeries tr;
  for (const auto& [d, l] : steps) tr.den.push_back(TraceFactor::make(d, l));
  return tr;
}

TraceSeries hypersurface_trace(const std::vector<TraceStep>& steps, const std::vector<TraceStep>& omegas) {
  TraceSeries tr = normal_sequence_trace(steps);
  for (const auto& [d, l] : omegas) tr.num.push_back(TraceFactor::make(d, l));
  return tr;
}

CycNum hdet_product(const std::vector<TraceStep>& steps, const std::vector<TraceStep>& omegas) {
  CycNum h(1L);
  for (const auto& [d, l] : steps) h *= l;
  for (const auto& [d, l] : omegas) h = h / l;
  return h;
}

int TraceSeries::pole_order_at_one() const {
  int k = 0;
  for (const auto& f : den) k += f.lambda_is_one() ? 1 : 0;
  for (const auto& f : num) k -= f.lambda_is_one() ? 1 : 0;
  return k;
}

std::pair<int, CycNum> TraceSeries::leading_at_infinity() const {
  int l = 0;
  CycNum c(1L);
  for (const auto& f : num) {
    l += static_cast<int>(f.degree);
    c *= -f.lambda();
  }
  for (const auto& f : den) {
    l -= static_cast<int>(f.degree);
    c = c / -f.lambda();
  }
  return {l, c};
}

HdetResult hdet_from_trace(const TraceSeries& tr, unsigned d) {
  auto [l, c] = tr.leading_at_infinity();
  const CycNum sign(d % 2 == 0 ? 1L : -1L);
  return {sign / c, l};
}

HdetResult hdet_from_trace(const RatFunc& tr, unsigned d) {
  const LaurentTerm lead = laurent_leading_at_infinity(tr);
  const Rat sign(d % 2 == 0 ? 1 : -1);
  return {CycNum(Rat(sign / lead.coefficient)), lead.exponent};
}

RatFunc TraceSeries::to_ratfunc() const { return molien_average({*this}); }

namespace {

using FactorKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
using TermKey = std::pair<std::vector<FactorKey>, std::vector<FactorKey>>;

std::vector<FactorKey> sorted_keys(const std::vector<TraceFactor>& fs) {
  std::vector<FactorKey> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.emplace_back(f.degree, f.root.order, f.root.power);
  std::sort(out.begin(), out.end());
  return out;
}

// Coefficients in Z[zeta_M][t], stored as [degree][exponent of zeta_M].
class GroupRingPoly {
 public:
  GroupRingPoly(std::size_t max_degree, std::uint64_t m, long long constant)
      : m_(m), c_((max_degree + 1) * m) {
    c_[0] = constant;
  }

  // Multiply by sum_{k < M} (zeta^a t^d)^k.
  void mul_geometric(std::uint64_t d, std::uint64_t a) {
    std::vector<long long> out(c_.size());
    const std::size_t rows = c_.size() / m_;
    for (std::size_t deg = 0; deg <= top_; ++deg) {
      for (std::uint64_t e = 0; e < m_; ++e) {
        const long long v = c_[deg * m_ + e];
        if (v == 0) continue;
        for (std::uint64_t k = 0; k < m_; ++k) {
          const std::size_t nd = deg + k * d;
          if (nd >= rows) throw Error(ErrorCode::InvalidArgument, "group ring degree overflow");
          out[nd * m_ + (e + k * a) % m_] += v;
        }
      }
    }
    top_ += (m_ - 1) * d;
    c_ = std::move(out);
  }

  // Multiply by 1 - zeta^b t^d.
  void mul_one_minus(std::uint64_t d, std::uint64_t b) {
    std::vector<long long> out = c_;
    for (std::size_t deg = 0; deg <= top_; ++deg) {
      for (std::uint64_t e = 0; e < m_; ++e) {
        const long long v = c_[(deg)*m_ + e];
        if (v == 0) continue;
        out[(deg + d) * m_ + (e + b) % m_] -= v;
      }
    }
    top_ += d;
    c_ = std::move(out);
  }

  void add_scaled(const GroupRingPoly& other, long long k) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += k * other.c_[i];
    top_ = std::max(top_, other.top_);
  }

  std::size_t top() const { return top_; }
  long long at(std::size_t deg, std::uint64_t e) const { return c_[deg * m_ + e]; }

 private:
  std::uint64_t m_;
  std::vector<long long> c_;
  std::size_t top_ = 0;
};

// The rational value of sum c[e] zeta_M^e, or nullopt.
std::optional<Int> collapse(std::vector<Int> c, std::uint64_t m) {
  if (m == 1) return c[0];
  const IntPoly& phi = cyclotomic_poly(m);
  const auto pc = phi.coeffs();
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    const Int v = c[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (pc[j] != 0) c[i - deg + j] -= v * pc[j];
    }
    c[i] = 0;
  }
  for (std::size_t i = 1; i < deg; ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  return c[0];
}

}  // namespace

RatFunc molien_average(const std::vector<TraceSeries>& terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidArgument, "average over an empty set");
  std::map<TermKey, long long> distinct;
  for (const auto& t : terms) ++distinct[{sorted_keys(t.den), sorted_keys(t.num)}];

  std::uint64_t m = 1;
  std::vector<std::uint64_t> den_degrees;
  std::size_t num_degree = 0;
  bool first = true;
  for (const auto& [key, mult] : distinct) {
    std::vector<std::uint64_t> degs;
    for (const auto& [d, o, p] : key.first) {
      degs.push_back(d);
      m = std::lcm(m, o);
    }
    std::size_t nd = 0;
    for (const auto& [d, o, p] : key.second) {
      nd += d;
      m = std::lcm(m, o);
    }
    num_degree = std::max(num_degree, nd);
    if (first) {
      den_degrees = degs;
      first = false;
    } else if (degs != den_degrees) {
      throw Error(ErrorCode::InvalidArgument, "trace terms have different denominator degrees");
    }
  }
  if (m > 4096) throw Error(ErrorCode::PromotionOverflow, "group exponent too large for averaging");

  std::size_t max_degree = num_degree;
  for (std::uint64_t d : den_degrees) max_degree += (m - 1) * d;
  GroupRingPoly total(max_degree, m, 0);
  for (const auto& [key, mult] : distinct) {
    GroupRingPoly p(max_degree, m, 1);
    for (const auto& [d, o, pw] : key.first) p.mul_geometric(d, pw * (m / o));
    for (const auto& [d, o, pw] : key.second) p.mul_one_minus(d, pw * (m / o));
    total.add_scaled(p, mult);
  }

  std::vector<Int> s(total.top() + 1);
  std::vector<Int> row(m);
  for (std::size_t deg = 0; deg <= total.top(); ++deg) {
    for (std::uint64_t e = 0; e < m; ++e) row[e] = Int(static_cast<long>(total.at(deg, e)));
    auto v = collapse(row, m);
    if (!v) {
      throw Error(ErrorCode::NonRationalCollapse, "irrational coefficient in degree " + std::to_string(deg));
    }
    s[deg] = *v;
  }
  IntPoly numer(std::move(s));

  // Denominator prod (1 - t^{M d}) = (-1)^r prod Phi_e; cancel what divides.
  std::vector<std::uint64_t> cyclo;
  for (std::uint64_t d : den_degrees) {
    for (std::uint64_t e : divisors(m * d)) cyclo.push_back(e);
  }
  std::sort(cyclo.begin(), cyclo.end());
  std::vector<std::uint64_t> remaining;
  for (std::size_t i = 0; i < cyclo.size(); ++i) {
    if (i > 0 && cyclo[i] == cyclo[i - 1] && !remaining.empty() && remaining.back() == cyclo[i]) {
      remaining.push_back(cyclo[i]);
      continue;
    }
    if (numer.is_zero()) {
      remaining.push_back(cyclo[i]);
      continue;
    }
    auto q = divide_exact(numer, cyclotomic_poly(cyclo[i]));
    if (q) {
      numer = std::move(*q);
    } else {
      remaining.push_back(cyclo[i]);
    }
  }
  const long sign = den_degrees.size() % 2 == 0 ? 1 : -1;
  IntPoly denom = IntPoly::constant(sign * static_cast<long>(terms.size()));
  for (std::uint64_t e : remaining) denom *= cyclotomic_poly(e);
  return RatFunc::from_coprime(std::move(numer), std::move(denom));
}

}  // namespace dupinv
