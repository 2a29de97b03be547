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

// Picard lattice of the plane blown up at four general points, the ten-curve
// quadrangle configuration on it, and the first homology of its complement.
//
// Basis: (H, E0, E1, E2, E3) with intersection form diag(+1, -1, -1, -1, -1).
// Curve order, used for every 10-vector in the library:
//   0..2  L1', L2', L3'   (L_j' = H - E0 - Ej, line through P0 and Pj)
//   3..5  L1,  L2,  L3    (L_j  = H - Ei - Ek, {i, j, k} = {1, 2, 3})
//   6..9  E0,  E1,  E2,  E3

#ifndef QUADCOVER_PICARD_HPP_
#define QUADCOVER_PICARD_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quadcover/linalg.hpp"

namespace quadcover {

inline constexpr int kNumCurves = 10;
inline constexpr int kPicardRank = 5;

template <typename T>
struct BasicDivClass {
  // (h, e0, e1, e2, e3): the class h*H + e0*E0 + ... + e3*E3.
  std::array<T, kPicardRank> c{};

  const T& h() const { return c[0]; }
  const T& e(int i) const { return c[1 + i]; }

  friend BasicDivClass operator+(BasicDivClass a, const BasicDivClass& b) {
    for (int i = 0; i < kPicardRank; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend BasicDivClass operator-(BasicDivClass a, const BasicDivClass& b) {
    for (int i = 0; i < kPicardRank; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend BasicDivClass operator-(BasicDivClass a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend BasicDivClass operator*(const T& s, BasicDivClass a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  BasicDivClass& operator+=(const BasicDivClass& b) { return *this = *this + b; }

  friend bool operator==(const BasicDivClass&, const BasicDivClass&) = default;
};

using DivClass = BasicDivClass<long long>;
using QDivClass = BasicDivClass<Rational>;

inline auto operator<=>(const DivClass& a, const DivClass& b) { return a.c <=> b.c; }

inline DivClass div_class(long long h, long long e0, long long e1, long long e2,
                          long long e3) {
  return {{h, e0, e1, e2, e3}};
}

inline DivClass hyperplane() { return div_class(1, 0, 0, 0, 0); }
inline DivClass exceptional(int i) {
  DivClass d;
  d.c[1 + i] = 1;
  return d;
}

inline QDivClass to_rational(const DivClass& d) {
  QDivClass q;
  for (int i = 0; i < kPicardRank; ++i) q.c[i] = d.c[i];
  return q;
}

template <typename T>
T intersect(const BasicDivClass<T>& a, const BasicDivClass<T>& b) {
  T out = a.c[0] * b.c[0];
  for (int i = 1; i < kPicardRank; ++i) out -= a.c[i] * b.c[i];
  return out;
}

// K_Y = -3H + E0 + E1 + E2 + E3.
inline DivClass canonical_class() { return div_class(-3, 1, 1, 1, 1); }

enum class CurveKind { kLinePrime, kLine, kExceptional };

struct BranchCurve {
  std::string label;
  CurveKind kind;
  DivClass cls;
};

// The ten branch curves and their 15 transversal intersection points.
class Configuration {
 public:
  Configuration() {
    for (int j = 1; j <= 3; ++j) {
      curves_[j - 1] = {"L" + std::to_string(j) + "'", CurveKind::kLinePrime,
                        hyperplane() - exceptional(0) - exceptional(j)};
    }
    for (int j = 1; j <= 3; ++j) {
      DivClass cls = hyperplane();
      for (int i = 1; i <= 3; ++i)
        if (i != j) cls = cls - exceptional(i);
      curves_[2 + j] = {"L" + std::to_string(j), CurveKind::kLine, cls};
    }
    for (int h = 0; h <= 3; ++h) {
      curves_[6 + h] = {"E" + std::to_string(h), CurveKind::kExceptional,
                        exceptional(h)};
    }
    for (int i = 0; i < kNumCurves; ++i)
      for (int j = i + 1; j < kNumCurves; ++j)
        if (intersect(curves_[i].cls, curves_[j].cls) == 1)
          incidences_.emplace_back(i, j);
  }

  const std::array<BranchCurve, kNumCurves>& curves() const { return curves_; }
  const BranchCurve& curve(int i) const { return curves_[i]; }

  // Unordered pairs (i < j) with D_i . D_j = 1, in lexicographic order.
  const std::vector<std::pair<int, int>>& incidences() const {
    return incidences_;
  }

  bool incident(int i, int j) const {
    return intersect(curves_[i].cls, curves_[j].cls) == 1 && i != j;
  }

  // D = sum of the ten curves.
  DivClass total() const {
    DivClass d;
    for (const auto& c : curves_) d += c.cls;
    return d;
  }

  // The 10x5 matrix with rows (D_i.H, D_i.E0, ..., D_i.E3).
  IntMatrix restriction_matrix() const {
    IntMatrix r(kNumCurves, std::vector<long long>(kPicardRank));
    for (int i = 0; i < kNumCurves; ++i) {
      r[i][0] = intersect(curves_[i].cls, hyperplane());
      for (int h = 0; h < 4; ++h)
        r[i][1 + h] = intersect(curves_[i].cls, exceptional(h));
    }
    return r;
  }

 private:
  std::array<BranchCurve, kNumCurves> curves_;
  std::vector<std::pair<int, int>> incidences_;
};

inline const Configuration& configuration() {
  static const Configuration config;
  return config;
}

inline std::vector<std::pair<int, int>> incidences() {
  return configuration().incidences();
}

// H_1(Y - D, Z) = coker(r : H^2(Y) -> sum_i Z[D_i]).
struct HomologyPresentation {
  IntMatrix restriction;  // 10x5
  SmithForm smith;
  int rank = 0;
  std::vector<long long> torsion;
  // Rows are relations among the loop classes (l1', l2', l3', l1, l2, l3,
  // e0, e1, e2, e3): sum of all six line loops, then e_h - (its three lines).
  IntMatrix relations;

  // True iff the 10-vector lies in the image of r, i.e. vanishes in the
  // cokernel.
  bool is_relation(const std::vector<long long>& x) const {
    std::vector<long long> ux(smith.u.size(), 0);
    for (std::size_t i = 0; i < smith.u.size(); ++i)
      for (std::size_t k = 0; k < x.size(); ++k) ux[i] += smith.u[i][k] * x[k];
    for (std::size_t i = 0; i < ux.size(); ++i) {
      if (i < smith.invariant_factors.size()) {
        if (ux[i] % smith.invariant_factors[i] != 0) return false;
      } else if (ux[i] != 0) {
        return false;
      }
    }
    return true;
  }
};

inline HomologyPresentation h1_complement() {
  const auto& config = configuration();
  HomologyPresentation out;
  out.restriction = config.restriction_matrix();
  out.smith = smith_normal_form(out.restriction);
  out.rank = kNumCurves - out.smith.rank();
  for (long long f : out.smith.invariant_factors)
    if (f > 1) out.torsion.push_back(f);

  std::vector<long long> lines(kNumCurves, 0);
  for (int i = 0; i < 6; ++i) lines[i] = 1;
  out.relations.push_back(lines);
  // e_h minus the loops of the three lines through the blown-up point P_h.
  for (int h = 0; h < 4; ++h) {
    std::vector<long long> rel(kNumCurves, 0);
    rel[6 + h] = 1;
    for (int i = 0; i < 6; ++i)
      if (intersect(config.curve(i).cls, exceptional(h)) == 1) rel[i] = -1;
    out.relations.push_back(rel);
  }
  return out;
}

}  // namespace quadcover

#endif  // QUADCOVER_PICARD_HPP_
