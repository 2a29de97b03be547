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


// quadcover: enumerate, classify and analyze (Z/n)^2-covers of the plane
// branched on a complete quadrangle.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quadcover/cli.hpp"

int main(int argc, char** argv) {
  namespace qc = quadcover::cli;
  CLI::App app{"(Z/n)^2-covers of the plane branched on a complete quadrangle"};
  app.require_subcommand(1);

  qc::RunConfig cfg;
  std::string format = "md";
  std::string output;
  app.add_option("--modulus", cfg.modulus, "Modulus n (prime)")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "md", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_flag("--verify", cfg.verify, "Compare against embedded golden data");
  app.add_flag("--dump", cfg.dump, "enumerate: list every admissible tuple");

  const std::string tuple_help = "Twelve comma-separated residues x1,y1,...,z3,w3";
  app.add_subcommand("enumerate", "Count (and optionally list) admissible tuples");
  app.add_subcommand("orbits", "Orbit decomposition under the symmetry group");
  app.add_subcommand("homology", "First homology of the branch complement");
  app.add_subcommand("report", "Full reproduction bundle");
  CLI::App* with_tuple[] = {
      app.add_subcommand("invariants", "K^2, chi, p_g and q of a cover"),
      app.add_subcommand("sheaf-table", "Character sheaves L_(a,b) of a cover"),
      app.add_subcommand("canonical", "Canonical system and degree of the canonical map"),
      app.add_subcommand("equations", "Defining relations of a cover"),
  };
  std::string tuple;
  for (auto* sub : with_tuple) sub->add_option("tuple", tuple, tuple_help)->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = qc::parse_format(format);
  if (!tuple.empty()) cfg.tuple = tuple;

  const qc::RunResult res = qc::run(cfg);
  for (const auto& e : res.errors) std::cerr << "quadcover: " << e << '\n';
  if (res.status == qc::kUsageError) return res.status;
  if (output.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << res.output;
    if (!out) {
      std::cerr << "quadcover: cannot write " << output << '\n';
      return qc::kUsageError;
    }
  }
  return res.status;
}
