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


#include "quadcover/report.hpp"

#include <gtest/gtest.h>

namespace quadcover::report {
namespace {

const SixTuple& u(int label) { return reference_representative(label); }

TEST(FormatTest, DivisorClasses) {
  EXPECT_EQ(format_class(div_class(3, -1, -2, -1, -1)), "3H - E0 - 2E1 - E2 - E3");
  EXPECT_EQ(format_class(hyperplane()), "H");
  EXPECT_EQ(format_class(DivClass{}), "0");
  EXPECT_EQ(format_class(canonical_class()), "-3H + E0 + E1 + E2 + E3");
  EXPECT_EQ(format_class(div_class(0, -1, 0, 0, 2)), "-E0 + 2E3");
}

TEST(FormatTest, RelationsAndMonomials) {
  EXPECT_EQ(relation_text({-1, -1, -1, 0, 0, 0, 1, 0, 0, 0}), "e0 = l1' + l2' + l3'");
  EXPECT_EQ(relation_text({1, 1, 1, 1, 1, 1, 0, 0, 0, 0}), "l1' + l2' + l3' + l1 + l2 + l3 = 0");
  EXPECT_EQ(monomial_text({3, 3, 1, 2, 0, 0, 4, 0, 2, 0}), "x1^3 x2^3 x3 x4^2 x7^4 x9^2");
  EXPECT_EQ(monomial_text({}), "1");
  EXPECT_EQ(fixed_divisor_text({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}), "R3");
}

TEST(JsonTest, InvariantsAreCompactAndOrdered) {
  EXPECT_EQ(invariants_json(invariants(u(3))).dump(), R"({"k2":45,"chi":5,"pg":4,"q":0})");
}

TEST(JsonTest, SheafTableKeyedByCharacter) {
  const Json j = sheaf_table_json(u(3), kZ5);
  ASSERT_EQ(j.size(), 25u);
  EXPECT_EQ(j["(1,3)"]["text"], "3H - E0 - E1 - E2 - E3");
  EXPECT_EQ(j["(2,1)"]["h0_KY_plus_L"], 1);
  EXPECT_EQ(j["(0,0)"]["class"], Json::array({0, 0, 0, 0, 0}));
}

TEST(JsonTest, CanonicalReport) {
  const Json j = canonical_json(degree_certificate(u(3)));
  EXPECT_EQ(j["tuple"], "1,0,1,0,0,1,4,1,3,2,1,1");
  EXPECT_EQ(j["degree_product"], 19);
  EXPECT_EQ(j["base_points"].size(), 5u);
  EXPECT_EQ(j["base_points"][2]["ideal"], "(x^2, xy^2, y^3)");
  EXPECT_EQ(j["base_points"][2]["type"], Json::array({2, 1, 1}));
  EXPECT_EQ(j["fixed_divisor"], "x3");
}

TEST(MarkdownTest, SheafTableLayout) {
  const std::string md = sheaf_table_md(u(3), kZ5);
  EXPECT_NE(md.find("| b = 0 | O_Y |"), std::string::npos);
  EXPECT_NE(md.find("| b = 1 | H |"), std::string::npos);
  EXPECT_NE(md.find("4H - 2E0 - E1 - 2E2 - 2E3 |\n| b = 4"), std::string::npos);
}

TEST(MarkdownTest, CanonicalNarrative) {
  const std::string md = canonical_md(degree_certificate(u(3)));
  EXPECT_NE(md.find("Fixed part: R3."), std::string::npos);
  EXPECT_NE(md.find("| R2 ∩ R9 | (x^2, xy^2, y^3) | (2,1,1) |"), std::string::npos);
  EXPECT_NE(md.find("= 19."), std::string::npos);
}

TEST(VerifyTest, DetectsDrift) {
  Verifier v;
  verify_enumeration(v, 201600);
  EXPECT_TRUE(v.ok());
  verify_enumeration(v, 201599);
  ASSERT_EQ(v.failures().size(), 1u);
  EXPECT_EQ(v.failures()[0], "admissible count: got 201599, expected 201600");

  Verifier w;
  SurfaceInvariants wrong = invariants(u(3));
  wrong.pg = 5;
  verify_invariants(w, u(3), wrong, kZ5);
  EXPECT_FALSE(w.ok());
}

TEST(VerifyTest, TablesOfReferenceTupleMatch) {
  Verifier v;
  verify_sheaf_table(v, u(3), kZ5);
  verify_canonical(v, degree_certificate(u(3)), kZ5);
  verify_homology(v, h1_complement());
  verify_ramification(v, ram_curve_numbers(u(3)));
  for (int l = 1; l <= 4; ++l) verify_invariants(v, u(l), invariants(u(l)), kZ5);
  for (const auto& f : v.failures()) ADD_FAILURE() << f;
}

TEST(VerifyTest, GoldenRepresentativesMatchLibrary) {
  for (int l = 1; l <= 4; ++l) {
    EXPECT_EQ(golden()["representatives"]["U" + std::to_string(l)].get<std::string>(),
              to_string(u(l)));
  }
}

TEST(FullReportTest, VerifiesAndIsDeterministic) {
  const FullReport a = build_full_report(2);
  Verifier v;
  verify_full_report(v, a);
  for (const auto& f : v.failures()) ADD_FAILURE() << f;
  const std::string md = full_report_md(a);
  const std::string json = full_report_json(a).dump();
  const FullReport b = build_full_report(1);
  EXPECT_EQ(full_report_md(b), md);
  EXPECT_EQ(full_report_json(b).dump(), json);
}

}  // namespace
}  // namespace quadcover::report
