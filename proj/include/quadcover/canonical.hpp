// Copyright 2026 The quadcover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The canonical system of the cover: a monomial basis in local equations
// x_1..x_10 of the ramification curves R_1..R_10, its fixed part, and the
// base points of the moving part resolved by monomial blow-ups.
//
// Every intersection point D_i n D_j has a single preimage on S (the two
// inertia groups span G), so base points are indexed by incident pairs.

#ifndef QUADCOVER_CANONICAL_HPP_
#define QUADCOVER_CANONICAL_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadcover/covers.hpp"
#include "quadcover/picard.hpp"
#include "quadcover/sheaves.hpp"

namespace quadcover {

using ExponentVector = std::array<int, kNumCurves>;

struct BasisEntry {
  FVec2 chi;
  ExponentVector exponents{};  // (n-1) - coeffs(t, chi)
  int dimension = 1;           // h^0(K_Y + L_chi)
};

struct CanonicalBasis {
  std::vector<BasisEntry> entries;  // characters in lexicographic order
};

inline CanonicalBasis basis(const SixTuple& t, ZMod m = kZ5) {
  require_admissible(t, m, "basis");
  const DivClass k = canonical_class();
  CanonicalBasis out;
  for (FVec2 chi : all_vectors(m)) {
    const int dim = h0(k + sheaf(t, chi, m).cls);
    if (dim == 0) continue;
    BasisEntry e{chi, {}, dim};
    const CoeffVector c = coeffs(t, chi, m);
    for (int i = 0; i < kNumCurves; ++i) e.exponents[i] = m.n() - 1 - c[i];
    out.entries.push_back(e);
  }
  return out;
}

inline ExponentVector fixed_part(const CanonicalBasis& b) {
  if (b.entries.empty()) throw std::invalid_argument("fixed_part: empty basis");
  ExponentVector out = b.entries.front().exponents;
  for (const auto& e : b.entries)
    for (int i = 0; i < kNumCurves; ++i) out[i] = std::min(out[i], e.exponents[i]);
  return out;
}

// Monomial ideal in two local coordinates (x, y); generators are exponent
// pairs kept minimal (none divides another) and sorted by x-exponent.
class MonomialIdeal2D {
 public:
  using Exponent = std::pair<int, int>;

  MonomialIdeal2D() = default;
  explicit MonomialIdeal2D(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
      const bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Exponent& h) {
        return h != g && h.first <= g.first && h.second <= g.second;
      });
      if (!redundant) gens_.push_back(g);
    }
  }

  static MonomialIdeal2D unit() { return MonomialIdeal2D({{0, 0}}); }

  const std::vector<Exponent>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front() == Exponent{0, 0}; }

  // Largest monomial dividing every generator.
  Exponent common_factor() const {
    if (gens_.empty()) return {0, 0};
    Exponent f{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const auto& [a, b] : gens_) f = {std::min(f.first, a), std::min(f.second, b)};
    return f;
  }

  // Multiplicity of a generic member at the origin.
  int order() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [a, b] : gens_) m = std::min(m, a + b);
    return m;
  }

  friend bool operator==(const MonomialIdeal2D&, const MonomialIdeal2D&) = default;

 private:
  std::vector<Exponent> gens_;
};

inline std::string to_string(const MonomialIdeal2D& ideal) {
  if (ideal.is_unit()) return "(1)";
  auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  };
  std::string out = "(";
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    const auto [a, b] = *it;
    if (out.size() > 1) out += ", ";
    out += power("x", a) + power("y", b);
  }
  return out + ")";
}

// Restriction of the moving part of the canonical system to the point
// R_i n R_j: subtract the fixed part and keep the exponents of x_i, x_j (all
// other local equations are units there).
inline MonomialIdeal2D local_ideal(const CanonicalBasis& b, const ExponentVector& fixed,
                                   std::pair<int, int> pair) {
  if (!configuration().incident(pair.first, pair.second)) {
    throw std::invalid_argument("local_ideal: curves " + std::to_string(pair.first) +
                                " and " + std::to_string(pair.second) +
                                " do not meet");
  }
  std::vector<MonomialIdeal2D::Exponent> gens;
  for (const auto& e : b.entries) {
    gens.emplace_back(e.exponents[pair.first] - fixed[pair.first],
                      e.exponents[pair.second] - fixed[pair.second]);
  }
  return MonomialIdeal2D(std::move(gens));
}

// Infinitely-near base point data: multiplicity here and the base points
// of the strict transform on the exceptional curve.
struct BasePointType {
  int multiplicity = 0;  // 0: no base point
  std::vector<BasePointType> infinitely_near;

  bool empty() const { return multiplicity == 0; }

  bool is_chain() const {
    if (infinitely_near.size() > 1) return false;
    return infinitely_near.empty() || infinitely_near.front().is_chain();
  }

  // (n1, n2, ..., nk) in depth-first order.
  std::vector<int> sequence() const {
    std::vector<int> out;
    if (empty()) return out;
    out.push_back(multiplicity);
    for (const auto& c : infinitely_near) {
      auto tail = c.sequence();
      out.insert(out.end(), tail.begin(), tail.end());
    }
    return out;
  }

  int square_sum() const {
    int s = multiplicity * multiplicity;
    for (const auto& c : infinitely_near) s += c.square_sum();
    return s;
  }
};

inline std::string to_string(const BasePointType& t) {
  if (t.empty()) return "()";
  if (t.is_chain()) {
    std::string out = "(";
    for (int n : t.sequence()) {
      if (out.size() > 1) out += ",";
      out += std::to_string(n);
    }
    return out + ")";
  }
  std::string out = std::to_string(t.multiplicity) + "[";
  for (std::size_t i = 0; i < t.infinitely_near.size(); ++i) {
    if (i) out += " ";
    out += to_string(t.infinitely_near[i]);
  }
  return out + "]";
}

// Blow up the origin: with m the order of the ideal, the strict transform in
// the chart (x, y/x) has generators (a + b - m, b) and in the chart (x/y, y)
// generators (a, a + b - m). Base points on the exceptional curve can only
// sit at the two chart origins.
inline BasePointType resolve_type(const MonomialIdeal2D& ideal) {
  if (ideal.empty()) throw std::invalid_argument("resolve_type: zero ideal");
  if (ideal.common_factor() != MonomialIdeal2D::Exponent{0, 0}) {
    throw std::invalid_argument("resolve_type: ideal " + to_string(ideal) +
                                " has a common factor (fixed curve left over)");
  }
  const int m = ideal.order();
  BasePointType out;
  if (m == 0) return out;
  out.multiplicity = m;
  std::vector<MonomialIdeal2D::Exponent> chart_x, chart_y;
  for (const auto& [a, b] : ideal.generators()) {
    chart_x.emplace_back(a + b - m, b);
    chart_y.emplace_back(a, a + b - m);
  }
  for (auto* chart : {&chart_x, &chart_y}) {
    BasePointType child = resolve_type(MonomialIdeal2D(std::move(*chart)));
    if (!child.empty()) out.infinitely_near.push_back(std::move(child));
  }
  return out;
}

struct BasePoint {
  std::pair<int, int> pair;  // incident curve indices, 0-based
  MonomialIdeal2D ideal;
  BasePointType type;
};

struct CanonicalReport {
  SixTuple tuple;
  CanonicalBasis basis;
  ExponentVector fixed_part{};
  std::vector<BasePoint> base_points;
  long long k2 = 0;
  long long moving_selfint = 0;  // (K_S - F)^2
  int type_square_sum = 0;
  long long degree_product = 0;  // deg(phi_K) * deg(image)
  bool birational = false;
  std::string justification;
  bool unexpected_branching = false;
};

inline bool is_prime_number(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline CanonicalReport degree_certificate(const SixTuple& t, ZMod m = kZ5) {
  const SurfaceInvariants inv = invariants(t, m);
  if (inv.pg != 4) {
    throw std::invalid_argument("degree_certificate: p_g = " + std::to_string(inv.pg) +
                                ", the canonical image is not a surface in P^3");
  }
  const auto& cfg = configuration();
  const auto ram = ram_curve_numbers(t, m);

  CanonicalReport rep;
  rep.tuple = t;
  rep.basis = basis(t, m);
  rep.fixed_part = fixed_part(rep.basis);
  rep.k2 = inv.k2;

  // (K - F)^2 with F = sum f_i R_i and R_i . R_j = D_i . D_j.
  long long f_sq = 0;
  long long k_f = 0;
  for (int i = 0; i < kNumCurves; ++i) {
    k_f += rep.fixed_part[i] * ram[i].kdot;
    for (int j = 0; j < kNumCurves; ++j) {
      const long long rr = i == j ? ram[i].selfint : intersect(cfg.curve(i).cls, cfg.curve(j).cls);
      f_sq += static_cast<long long>(rep.fixed_part[i]) * rep.fixed_part[j] * rr;
    }
  }
  rep.moving_selfint = rep.k2 - 2 * k_f + f_sq;

  for (const auto& pair : cfg.incidences()) {
    MonomialIdeal2D ideal = local_ideal(rep.basis, rep.fixed_part, pair);
    if (ideal.is_unit()) continue;
    BasePointType type = resolve_type(ideal);
    rep.unexpected_branching = rep.unexpected_branching || !type.is_chain();
    rep.type_square_sum += type.square_sum();
    rep.base_points.push_back({pair, std::move(ideal), std::move(type)});
  }
  rep.degree_product = rep.moving_selfint - rep.type_square_sum;
  // The image spans P^3, so it is not a plane and has degree >= 2; a prime
  // product then forces deg(phi_K) = 1.
  if (is_prime_number(rep.degree_product)) {
    rep.birational = true;
    rep.justification = "prime-degree argument";
  } else {
    rep.justification = "degree product not prime; birationality undecided";
  }
  return rep;
}

}  // namespace quadcover

#endif  // QUADCOVER_CANONICAL_HPP_
