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


#include "quadcover/cli.hpp"

#include <gtest/gtest.h>

namespace quadcover::cli {
namespace {

constexpr const char* kU3 = "1,0,1,0,0,1,4,1,3,2,1,1";

RunConfig config(std::string command, std::optional<std::string> tuple = std::nullopt) {
  RunConfig c;
  c.command = std::move(command);
  c.tuple = std::move(tuple);
  return c;
}

TEST(RunTest, EnumerateVerify) {
  RunConfig c = config("enumerate");
  c.verify = true;
  const RunResult r = run(c);
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.output.find("201600"), std::string::npos);
  EXPECT_TRUE(r.errors.empty());
}

TEST(RunTest, EnumerateDumpAsCsv) {
  RunConfig c = config("enumerate");
  c.modulus = 3;
  c.dump = true;
  c.format = Format::kCsv;
  const RunResult r = run(c);
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(r.output.rfind("x1,y1,x2,y2,x3,y3,z1,w1,z2,w2,z3,w3\n", 0), 0u);
}

TEST(RunTest, InvariantsJson) {
  RunConfig c = config("invariants", kU3);
  c.format = Format::kJson;
  c.verify = true;
  const RunResult r = run(c);
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(report::Json::parse(r.output).dump(), R"({"k2":45,"chi":5,"pg":4,"q":0})");
}

TEST(RunTest, OrbitsMarkdown) {
  RunConfig c = config("orbits");
  c.verify = true;
  const RunResult r = run(c);
  ASSERT_EQ(r.status, kOk);
  EXPECT_NE(r.output.find("| 28800 | 2 |"), std::string::npos);
  EXPECT_NE(r.output.find("| U3 | 1,0,1,0,0,1,4,1,3,2,1,1 |"), std::string::npos);
}

TEST(RunTest, TupleCommandsVerify) {
  for (const char* cmd : {"sheaf-table", "canonical", "equations"}) {
    for (Format f : {Format::kJson, Format::kMarkdown, Format::kCsv}) {
      RunConfig c = config(cmd, kU3);
      c.verify = true;
      c.format = f;
      const RunResult r = run(c);
      EXPECT_EQ(r.status, kOk) << cmd;
      EXPECT_FALSE(r.output.empty()) << cmd;
    }
  }
  RunConfig h = config("homology");
  h.verify = true;
  EXPECT_EQ(run(h).status, kOk);
}

TEST(RunTest, JsonTupleRoundTrip) {
  RunConfig c = config("canonical", kU3);
  c.format = Format::kJson;
  const RunResult first = run(c);
  ASSERT_EQ(first.status, kOk);
  c.tuple = report::Json::parse(first.output)["tuple"].get<std::string>();
  EXPECT_EQ(run(c).output, first.output);
}

TEST(RunTest, ErrorsCarryReasons) {
  const RunResult bad = run(config("invariants", "1,0,1,0,0,1,2,0,2,4,4,0"));
  EXPECT_EQ(bad.status, kUsageError);
  ASSERT_EQ(bad.errors.size(), 1u);
  EXPECT_NE(bad.errors[0].find("condition 2"), std::string::npos);
  EXPECT_TRUE(bad.output.empty());

  EXPECT_EQ(run(config("invariants")).status, kUsageError);
  EXPECT_EQ(run(config("frobnicate")).status, kUsageError);
  EXPECT_EQ(run(config("canonical", "1,2")).status, kUsageError);
  EXPECT_EQ(run(config("canonical", "1,0,1,0,0,1,2,1,2,1,4,2")).status, kUsageError);

  RunConfig composite = config("homology");
  composite.modulus = 6;
  EXPECT_EQ(run(composite).status, kUsageError);

  RunConfig other = config("homology");
  other.modulus = 7;
  EXPECT_EQ(run(other).status, kOk);
  other.verify = true;
  EXPECT_EQ(run(other).status, kUsageError);

  RunConfig csv_report = config("report");
  csv_report.format = Format::kCsv;
  EXPECT_EQ(run(csv_report).status, kUsageError);
}

TEST(RunTest, OtherPrimeModulus) {
  RunConfig c = config("orbits");
  c.modulus = 3;
  c.format = Format::kJson;
  const RunResult r = run(c);
  ASSERT_EQ(r.status, kOk) << (r.errors.empty() ? "" : r.errors[0]);
  const auto j = report::Json::parse(r.output);
  EXPECT_EQ(j["modulus"], 3);
}

TEST(FormatTest, Parse) {
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_EQ(parse_format("md"), Format::kMarkdown);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace quadcover::cli
