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


#include "quadcover/linalg.hpp"

#include <random>

#include <gtest/gtest.h>

namespace quadcover {
namespace {

TEST(RationalRankTest, SmallMatrices) {
  EXPECT_EQ(rational_rank(to_rational({{1, 2}, {2, 4}})), 1);
  EXPECT_EQ(rational_rank(to_rational({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3);
  EXPECT_EQ(rational_rank(to_rational({{0, 0}, {0, 0}})), 0);
  EXPECT_EQ(rational_rank({}), 0);
}

TEST(SmithFormTest, KnownInvariantFactors) {
  const IntMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.invariant_factors, (std::vector<long long>{2, 6, 12}));
}

TEST(SmithFormTest, FactorizationHoldsOnRandomMatrices) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> r(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(4, std::vector<long long>(3));
    for (auto& row : a)
      for (auto& x : row) x = r(rng);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(multiply(multiply(s.u, a), s.v), s.d);
    for (std::size_t i = 0; i < s.d.size(); ++i)
      for (std::size_t j = 0; j < s.d[i].size(); ++j) {
        if (i != j) {
          EXPECT_EQ(s.d[i][j], 0);
        }
      }
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
      EXPECT_EQ(s.invariant_factors[i] % s.invariant_factors[i - 1], 0);
    EXPECT_EQ(s.rank(), rational_rank(to_rational(a)));
  }
}

TEST(MatrixHelpersTest, TransposeAndIdentity) {
  const IntMatrix a = {{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(transpose(a), (IntMatrix{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(multiply(identity_matrix(2), a), a);
}

}  // namespace
}  // namespace quadcover
