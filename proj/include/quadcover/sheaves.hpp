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

// Character sheaves of the cover S -> Y and the invariants they determine.
//
// For a character chi = (a, b) the residues of chi on the ten loop images
// (delta_1..3 on L', lambda_1..3 on L, mu_0..3 on E) give
//   n * L_chi = sum_i coeff_i * D_i
// and p_* O_S = sum over chi of L_chi^{-1}.

#ifndef QUADCOVER_SHEAVES_HPP_
#define QUADCOVER_SHEAVES_HPP_

#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadcover/covers.hpp"
#include "quadcover/gf5core.hpp"
#include "quadcover/linalg.hpp"
#include "quadcover/picard.hpp"

namespace quadcover {

// (delta1, delta2, delta3, lambda1, lambda2, lambda3, mu0, mu1, mu2, mu3).
using CoeffVector = std::array<int, kNumCurves>;

inline CoeffVector coeffs(const SixTuple& t, FVec2 chi, ZMod m = kZ5) {
  const LoopImages img = loop_images(t, m);
  CoeffVector out{};
  for (int i = 0; i < kNumCurves; ++i) out[i] = chi_eval(chi, img[i], m);
  return out;
}

struct CharacterSheaf {
  FVec2 chi;
  DivClass cls;
};

inline CharacterSheaf sheaf(const SixTuple& t, FVec2 chi, ZMod m = kZ5) {
  const auto& cfg = configuration();
  const CoeffVector c = coeffs(t, chi, m);
  DivClass sum;
  for (int i = 0; i < kNumCurves; ++i) sum += c[i] * cfg.curve(i).cls;
  for (long long& x : sum.c) {
    if (x % m.n() != 0) {
      throw std::logic_error("character sheaf (" + std::to_string(chi.x) + "," +
                             std::to_string(chi.y) + ") of " + to_string(t) +
                             " is not integral");
    }
    x /= m.n();
  }
  return {chi, sum};
}

// All n^2 characters, row-major by (b, a): index = b * n + a.
inline std::vector<FVec2> characters_by_row(ZMod m = kZ5) {
  std::vector<FVec2> out;
  for (int b = 0; b < m.n(); ++b)
    for (int a = 0; a < m.n(); ++a) out.push_back({a, b});
  return out;
}

inline std::vector<CharacterSheaf> sheaf_table(const SixTuple& t, ZMod m = kZ5) {
  std::vector<CharacterSheaf> out;
  for (FVec2 chi : characters_by_row(m)) out.push_back(sheaf(t, chi, m));
  return out;
}

namespace detail {

inline long long falling(int k, int r) {
  long long out = 1;
  for (int i = 0; i < r; ++i) out *= (k - i);
  return out;
}

inline long long ipow(int base, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace detail

// The four blown-up points P0 = (1:0:0), P1 = (0:1:0), P2 = (0:0:1),
// P3 = (1:1:1).
inline constexpr std::array<std::array<int, 3>, 4> kBlownUpPoints = {
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};

// Exponents (i, j, k) of the degree-d monomials x^i y^j z^k.
inline std::vector<std::array<int, 3>> plane_monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

// Rows: one per partial derivative of order < m_h at each point P_h;
// columns: degree-d monomials.
inline IntMatrix interpolation_matrix(int d, const std::array<int, 4>& mult) {
  const auto monos = plane_monomials(d);
  IntMatrix rows;
  for (int h = 0; h < 4; ++h) {
    const auto& p = kBlownUpPoints[h];
    for (int ord = 0; ord < mult[h]; ++ord) {
      for (const auto& alpha : plane_monomials(ord)) {
        std::vector<long long> row;
        row.reserve(monos.size());
        for (const auto& mono : monos) {
          long long v = 1;
          for (int c = 0; c < 3 && v != 0; ++c) {
            if (alpha[c] > mono[c]) {
              v = 0;
            } else {
              v *= detail::falling(mono[c], alpha[c]) *
                   detail::ipow(p[c], mono[c] - alpha[c]);
            }
          }
          row.push_back(v);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

// h^0(Y, O(c)) for c = d H - sum m_i E_i: plane curves of degree d with
// multiplicity >= m_i at P_i. Negative m_i are clamped to 0 since E_i is
// then a fixed component.
inline int h0(const DivClass& c) {
  const long long d = c.h();
  if (d < 0) return 0;
  std::array<int, 4> mult{};
  bool any = false;
  for (int i = 0; i < 4; ++i) {
    mult[i] = static_cast<int>(std::max<long long>(0, -c.e(i)));
    any = any || mult[i] > 0;
  }
  const int monomials = static_cast<int>((d + 1) * (d + 2) / 2);
  if (!any) return monomials;
  return monomials - rational_rank(to_rational(interpolation_matrix(static_cast<int>(d), mult)));
}

struct SurfaceInvariants {
  long long k2 = 0;
  long long chi_O = 0;
  long long pg = 0;
  long long q = 0;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// K_Y + ((n-1)/n) D, the class with p^* of it equal to K_S.
inline QDivClass log_canonical_class(ZMod m = kZ5) {
  const Rational w(m.n() - 1, m.n());
  return to_rational(canonical_class()) + w * to_rational(configuration().total());
}

// K_S^2 = n^2 (K_Y + ((n-1)/n) D)^2.
inline long long canonical_square(ZMod m = kZ5) {
  const QDivClass k = log_canonical_class(m);
  const Rational sq = Rational(m.n() * m.n()) * intersect(k, k);
  if (denominator(sq) != 1) throw std::logic_error("K_S^2 is not an integer");
  return static_cast<long long>(numerator(sq));
}

// chi(O_S) = sum over characters of chi(L^{-1}) = 1 + L.(L + K_Y)/2.
inline long long holomorphic_euler_characteristic(const SixTuple& t, ZMod m = kZ5) {
  const DivClass k = canonical_class();
  long long total = 0;
  for (const auto& s : sheaf_table(t, m)) {
    const long long twice = intersect(s.cls, s.cls + k);
    if (twice % 2 != 0) throw std::logic_error("odd L.(L+K)");
    total += 1 + twice / 2;
  }
  return total;
}

inline void require_admissible(const SixTuple& t, ZMod m, const char* what) {
  if (auto r = is_admissible(t, m); !r) {
    throw std::invalid_argument(std::string(what) + ": " + to_string(t) +
                                " is not admissible (" + r.explain() + ")");
  }
}

// h^0(K_Y + L_chi) for each character, row-major by (b, a).
inline std::vector<int> canonical_eigenspace_dims(const SixTuple& t, ZMod m = kZ5) {
  const DivClass k = canonical_class();
  std::vector<int> out;
  for (const auto& s : sheaf_table(t, m)) out.push_back(h0(k + s.cls));
  return out;
}

inline SurfaceInvariants invariants(const SixTuple& t, ZMod m = kZ5) {
  require_admissible(t, m, "invariants");
  SurfaceInvariants inv;
  for (int d : canonical_eigenspace_dims(t, m)) inv.pg += d;
  inv.chi_O = holomorphic_euler_characteristic(t, m);
  inv.q = inv.pg + 1 - inv.chi_O;
  inv.k2 = canonical_square(m);
  return inv;
}

struct RamificationNumbers {
  long long selfint = 0;  // R_i^2
  long long kdot = 0;     // K_S . R_i
  long long genus = 0;
};

// p^* D_i = n R_i gives R_i^2 = D_i^2 and, by the projection formula,
// K_S . R_i = n (K_Y + ((n-1)/n) D) . D_i.
inline std::array<RamificationNumbers, kNumCurves> ram_curve_numbers(const SixTuple& t,
                                                                     ZMod m = kZ5) {
  require_admissible(t, m, "ram_curve_numbers");
  const auto& cfg = configuration();
  const QDivClass k = log_canonical_class(m);
  std::array<RamificationNumbers, kNumCurves> out{};
  for (int i = 0; i < kNumCurves; ++i) {
    const DivClass& d = cfg.curve(i).cls;
    const Rational kdot = Rational(m.n()) * intersect(k, to_rational(d));
    if (denominator(kdot) != 1) throw std::logic_error("K_S.R_i is not an integer");
    out[i].selfint = intersect(d, d);
    out[i].kdot = static_cast<long long>(numerator(kdot));
    const long long twice_g_minus_2 = out[i].selfint + out[i].kdot;
    out[i].genus = twice_g_minus_2 / 2 + 1;
  }
  return out;
}

// Order of chi in the character group.
inline int character_order(FVec2 chi, ZMod m = kZ5) {
  return m.n() / std::gcd(m.n(), std::gcd(chi.x, chi.y));
}

using EpsilonVector = std::array<int, kNumCurves>;

// eps_i = 1 iff lambda Delta_i + lambda' Delta'_i >= M, where Delta are the
// residues of chi resp. chi' in Z/d resp. Z/d', M = lcm(d, d'),
// lambda = M/d, lambda' = M/d'.
inline EpsilonVector epsilon(const SixTuple& t, FVec2 chi, FVec2 chi2, ZMod m = kZ5) {
  const int d1 = character_order(chi, m);
  const int d2 = character_order(chi2, m);
  const int big_m = std::lcm(d1, d2);
  const CoeffVector c1 = coeffs(t, chi, m);
  const CoeffVector c2 = coeffs(t, chi2, m);
  EpsilonVector out{};
  for (int i = 0; i < kNumCurves; ++i) {
    const int delta1 = c1[i] / (m.n() / d1);
    const int delta2 = c2[i] / (m.n() / d2);
    out[i] = (big_m / d1) * delta1 + (big_m / d2) * delta2 >= big_m ? 1 : 0;
  }
  return out;
}

// w_chi w_chi' = prod_i sigma_i^eps_i w_{chi + chi'}.
struct CoverRelation {
  FVec2 lhs1;
  FVec2 lhs2;
  EpsilonVector sigma_exponents{};
  FVec2 rhs;
};

// One relation per unordered pair (with repetition) of nontrivial
// characters, pairs in lexicographic order.
inline std::vector<CoverRelation> cover_equations(const SixTuple& t, ZMod m = kZ5) {
  require_admissible(t, m, "cover_equations");
  const auto chars = nonzero_vectors(m);
  std::vector<CoverRelation> out;
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i; j < chars.size(); ++j)
      out.push_back({chars[i], chars[j], epsilon(t, chars[i], chars[j], m),
                     add(chars[i], chars[j], m)});
  return out;
}

inline std::string to_string(const CoverRelation& r) {
  auto w = [](FVec2 c) {
    return "w[" + std::to_string(c.x) + "," + std::to_string(c.y) + "]";
  };
  std::string eps;
  for (int e : r.sigma_exponents) {
    eps += eps.empty() ? "(" : ",";
    eps += std::to_string(e);
  }
  eps += ")";
  return w(r.lhs1) + "·" + w(r.lhs2) + " = σ^" + eps + " · " + w(r.rhs);
}

}  // namespace quadcover

#endif  // QUADCOVER_SHEAVES_HPP_
