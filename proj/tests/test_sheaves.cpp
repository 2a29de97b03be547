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


#include "quadcover/sheaves.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "quadcover/symmetry.hpp"

namespace quadcover {
namespace {

const SixTuple& u(int label) { return reference_representative(label); }

std::vector<SixTuple> random_admissible(int count, unsigned seed) {
  static const std::vector<SixTuple> all = enumerate_admissible();
  std::mt19937 rng(seed);
  std::vector<SixTuple> out;
  for (int i = 0; i < count; ++i) out.push_back(all[rng() % all.size()]);
  return out;
}

// Rank over Z/p by Gaussian elimination.
int rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
  auto pw = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && ((a[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const long long inv = pw(((a[rank][c] % p) + p) % p, p - 2);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const long long f = ((a[r][c] % p) + p) % p * inv % p;
      for (std::size_t k = 0; k < cols; ++k)
        a[r][k] = ((a[r][k] - f * (a[rank][k] % p)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent h0: dehomogenize at each point, translate it to the origin by
// substitution and require every coefficient of order < m to vanish.
int h0_oracle(const DivClass& c) {
  const int d = static_cast<int>(c.h());
  if (d < 0) return 0;
  std::vector<std::array<int, 3>> monos;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) monos.push_back({i, j, d - i - j});
  std::vector<std::vector<long long>> rows;
  for (int h = 0; h < 4; ++h) {
    const int m = static_cast<int>(std::max<long long>(0, -c.e(h)));
    const auto& p = kBlownUpPoints[h];
    int chart = 0;
    while (p[chart] == 0) ++chart;
    const int s = (chart + 1) % 3, t = (chart + 2) % 3;
    for (int a = 0; a < m; ++a)
      for (int b = 0; a + b < m; ++b) {
        std::vector<long long> row;
        for (const auto& mono : monos) {
          // (X + p_s)^{mono[s]} (Y + p_t)^{mono[t]}: coefficient of X^a Y^b.
          long long v = 0;
          if (a <= mono[s] && b <= mono[t]) {
            v = binom(mono[s], a) * binom(mono[t], b);
            for (int k = 0; k < mono[s] - a; ++k) v *= p[s];
            for (int k = 0; k < mono[t] - b; ++k) v *= p[t];
          }
          row.push_back(v);
        }
        rows.push_back(row);
      }
  }
  return static_cast<int>(monos.size()) - rank_mod_p(rows, 1000003);
}

TEST(CoeffsTest, ReferenceRows) {
  EXPECT_EQ(coeffs(u(3), {1, 3}), (CoeffVector{1, 1, 3, 2, 4, 4, 0, 4, 2, 4}));
  EXPECT_EQ(coeffs(u(3), {4, 1}), (CoeffVector{4, 4, 1, 2, 4, 0, 4, 3, 1, 2}));
  EXPECT_EQ(coeffs(u(3), {0, 0}), CoeffVector{});
  EXPECT_EQ(coeffs(u(3), {2, 1}), (CoeffVector{2, 2, 1, 4, 3, 3, 0, 3, 4, 3}));
  EXPECT_EQ(coeffs(u(3), {3, 2}), (CoeffVector{3, 3, 2, 4, 3, 0, 3, 1, 2, 4}));
}

TEST(SheafTest, ReferenceEntries) {
  EXPECT_EQ(sheaf(u(3), {1, 3}).cls, div_class(3, -1, -1, -1, -1));
  EXPECT_EQ(sheaf(u(3), {0, 1}).cls, hyperplane());
  EXPECT_EQ(sheaf(u(3), {0, 0}).cls, DivClass{});
  EXPECT_EQ(sheaf(u(3), {4, 3}).cls, div_class(4, -2, -1, -2, -2));
}

TEST(SheafTest, TableIsRowMajorByB) {
  const auto table = sheaf_table(u(3));
  ASSERT_EQ(table.size(), 25u);
  for (int b = 0; b < 5; ++b)
    for (int a = 0; a < 5; ++a) EXPECT_EQ(table[b * 5 + a].chi, (FVec2{a, b}));
  EXPECT_EQ(table[5 * 3 + 4].cls, div_class(4, -2, -1, -2, -2));
  EXPECT_EQ(table[5 * 2 + 4].cls, div_class(3, -2, -1, -1, -1));
}

TEST(SheafTest, NonIntegralConventionIsDetected) {
  // Violates condition 0, so the weighted branch sum is not divisible by 5.
  const SixTuple bad = make_tuple({{{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}});
  EXPECT_THROW(sheaf(bad, {1, 0}), std::logic_error);
}

TEST(SheafTest, IntegralityOnRandomAdmissibleTuples) {
  for (const auto& t : random_admissible(500, 23)) {
    const auto table = sheaf_table(t);
    EXPECT_EQ(table.front().cls, DivClass{});
    for (const auto& s : table) {
      DivClass weighted;
      const auto c = coeffs(t, s.chi);
      for (int i = 0; i < kNumCurves; ++i) weighted += c[i] * configuration().curve(i).cls;
      ASSERT_EQ(weighted, 5 * s.cls);
    }
  }
}

TEST(H0Test, Examples) {
  const DivClass k = canonical_class();
  EXPECT_EQ(h0(DivClass{}), 1);
  EXPECT_EQ(h0(hyperplane()), 3);
  EXPECT_EQ(h0(k + sheaf(u(3), {2, 1}).cls), 1);
  EXPECT_EQ(h0(k + sheaf(u(3), {0, 1}).cls), 0);
  EXPECT_EQ(h0(div_class(-1, 0, 0, 0, 0)), 0);
  EXPECT_EQ(h0(div_class(2, -1, -1, -1, -1)), 2);
  EXPECT_EQ(h0(div_class(1, 1, 0, 0, 0)), 3);
  EXPECT_EQ(h0(div_class(2, -2, -2, 0, 0)), 1);  // the double line P0P1
  EXPECT_EQ(h0(div_class(4, -2, -2, -2, -2)), 3);
  EXPECT_EQ(h0(div_class(3, -2, -1, -1, -1)), 4);
}

TEST(H0Test, AgreesWithOraclesOnTableClasses) {
  const DivClass k = canonical_class();
  for (const auto& s : sheaf_table(u(3))) {
    for (const DivClass& c : {s.cls, k + s.cls}) {
      EXPECT_EQ(h0(c), h0_oracle(c)) << c.h() << " " << c.e(0) << c.e(1) << c.e(2) << c.e(3);
      bool simple = c.h() >= 0;
      int points = 0;
      for (int i = 0; i < 4; ++i) {
        simple = simple && c.e(i) >= -1;
        points += c.e(i) == -1;
      }
      if (simple) {
        const long long monos = (c.h() + 1) * (c.h() + 2) / 2;
        EXPECT_EQ(h0(c), std::max<long long>(0, monos - points));
      }
    }
  }
}

TEST(H0Test, AgreesWithOracleOnSmallClasses) {
  for (int d = 0; d <= 5; ++d)
    for (int code = 0; code < 81; ++code) {
      DivClass c = div_class(d, 0, 0, 0, 0);
      int x = code;
      for (int i = 0; i < 4; ++i, x /= 3) c.c[1 + i] = -(x % 3);
      ASSERT_EQ(h0(c), h0_oracle(c)) << d << " " << code;
    }
}

TEST(InvariantsTest, ReferenceRepresentatives) {
  EXPECT_EQ(invariants(u(3)), (SurfaceInvariants{45, 5, 4, 0}));
  for (int l : {1, 2, 4}) {
    const auto inv = invariants(u(l));
    EXPECT_EQ(inv.q, 2) << "U" << l;
    EXPECT_EQ(inv.pg, 6) << "U" << l;
    EXPECT_EQ(inv.chi_O, inv.pg - inv.q + 1);
  }
}

TEST(InvariantsTest, CanonicalSquareInRationalArithmetic) {
  const QDivClass k = log_canonical_class();
  EXPECT_EQ(Rational(25) * intersect(k, k), Rational(45));
  EXPECT_EQ(canonical_square(), 45);
}

TEST(InvariantsTest, RejectsInadmissibleTuples) {
  const SixTuple t = make_tuple({{{1, 0}, {1, 0}, {0, 1}, {2, 0}, {2, 4}, {4, 0}}});
  EXPECT_THROW(invariants(t), std::invalid_argument);
  EXPECT_THROW(ram_curve_numbers(t), std::invalid_argument);
  EXPECT_THROW(cover_equations(t), std::invalid_argument);
}

TEST(InvariantsTest, ConstantOnOrbitsOfGenerators) {
  const auto gens = symmetry_generators();
  for (int l = 1; l <= 4; ++l) {
    const auto base = invariants(u(l));
    // Walk a generator word through the orbit.
    SixTuple t = u(l);
    std::mt19937 rng(l);
    for (int step = 0; step < 40; ++step) {
      t = gens[rng() % gens.size()].apply(t);
      ASSERT_EQ(invariants(t), base) << to_string(t);
    }
  }
}

TEST(InvariantsTest, ChiAndK2AreConstantOnRandomTuples) {
  for (const auto& t : random_admissible(100, 29)) {
    const auto inv = invariants(t);
    EXPECT_EQ(inv.k2, 45);
    EXPECT_EQ(inv.chi_O, 5);
    EXPECT_TRUE(inv.q == 0 || inv.q == 2);
  }
}

TEST(RamificationTest, AllCurvesGenusTwo) {
  const auto ram = ram_curve_numbers(u(3));
  for (int i = 0; i < kNumCurves; ++i) {
    EXPECT_EQ(ram[i].selfint, -1);
    EXPECT_EQ(ram[i].kdot, 3);
    EXPECT_EQ(ram[i].genus, 2);
  }
}

TEST(EpsilonTest, Examples) {
  EXPECT_EQ(epsilon(u(3), {2, 1}, {2, 1}), (EpsilonVector{0, 0, 0, 1, 1, 1, 0, 1, 1, 1}));
  for (const FVec2& chi : all_vectors()) EXPECT_EQ(epsilon(u(3), {0, 0}, chi), EpsilonVector{});
  EXPECT_EQ(character_order({0, 0}), 1);
  EXPECT_EQ(character_order({2, 3}), 5);
}

TEST(EpsilonTest, CocycleIdentityOnRandomTriples) {
  const auto tuples = random_admissible(200, 31);
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> r(0, 4);
  for (const auto& t : tuples) {
    const FVec2 chi{r(rng), r(rng)}, chi2{r(rng), r(rng)};
    const auto eps = epsilon(t, chi, chi2);
    DivClass rhs;
    for (int i = 0; i < kNumCurves; ++i) rhs += eps[i] * configuration().curve(i).cls;
    ASSERT_EQ(sheaf(t, chi).cls + sheaf(t, chi2).cls - sheaf(t, add(chi, chi2)).cls, rhs);
  }
}

TEST(EquationsTest, CountAndFormat) {
  const auto rels = cover_equations(u(3));
  ASSERT_EQ(rels.size(), 300u);
  for (const auto& r : rels) EXPECT_EQ(r.rhs, add(r.lhs1, r.lhs2));
  const auto it = std::find_if(rels.begin(), rels.end(), [](const CoverRelation& r) {
    return r.lhs1 == FVec2{2, 1} && r.lhs2 == FVec2{2, 1};
  });
  ASSERT_NE(it, rels.end());
  EXPECT_EQ(it->sigma_exponents, (EpsilonVector{0, 0, 0, 1, 1, 1, 0, 1, 1, 1}));
  EXPECT_EQ(to_string(*it), "w[2,1]·w[2,1] = σ^(0,0,0,1,1,1,0,1,1,1) · w[4,2]");
}

}  // namespace
}  // namespace quadcover
