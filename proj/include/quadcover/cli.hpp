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


// Subcommand dispatch shared by the command-line tool and its tests.

#ifndef QUADCOVER_CLI_HPP_
#define QUADCOVER_CLI_HPP_

#include <algorithm>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadcover/quadcover.hpp"

namespace quadcover::cli {

enum class Format { kJson, kMarkdown, kCsv };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "md") return Format::kMarkdown;
  if (s == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, md or csv)");
}

struct RunConfig {
  std::string command;
  std::optional<std::string> tuple;
  int modulus = 5;
  Format format = Format::kMarkdown;
  bool verify = false;
  bool dump = false;
  int threads = 0;  // 0: QC_THREADS or hardware concurrency
};

enum ExitCode { kOk = 0, kUsageError = 1, kVerifyFailed = 2 };

struct RunResult {
  int status = kOk;
  std::string output;
  std::vector<std::string> errors;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "enumerate", "orbits",     "invariants", "sheaf-table",
      "canonical", "homology",   "equations",  "report"};
  return names;
}

inline bool needs_tuple(const std::string& command) {
  return command == "invariants" || command == "sheaf-table" || command == "canonical" ||
         command == "equations";
}

namespace detail {

inline std::string dump_json(const report::Json& j) { return j.dump(2) + "\n"; }

inline std::string render(Format f, const report::Json& json, const std::string& md,
                          const std::string& csv) {
  switch (f) {
    case Format::kJson: return dump_json(json);
    case Format::kMarkdown: return md;
    case Format::kCsv: return csv;
  }
  return md;
}

inline std::string run_command(const RunConfig& cfg, ZMod m, report::Verifier& v) {
  using namespace report;
  const std::string& cmd = cfg.command;
  const Format f = cfg.format;

  if (cmd == "homology") {
    const auto h = h1_complement();
    if (cfg.verify) verify_homology(v, h);
    return render(f, homology_json(h), homology_md(h), homology_csv(h));
  }
  if (cmd == "enumerate") {
    const auto tuples = enumerate_admissible(m, cfg.threads);
    if (cfg.verify) verify_enumeration(v, tuples.size());
    return render(f, enumeration_json(tuples, m, cfg.dump), enumeration_md(tuples, m, cfg.dump),
                  enumeration_csv(tuples, cfg.dump));
  }
  if (cmd == "orbits") {
    const auto tuples = enumerate_admissible(m, cfg.threads);
    const auto gens = symmetry_generators(m);
    const std::size_t order = symmetry_group_order(m);
    const auto part = orbits(tuples, gens, order, m);
    if (cfg.verify) {
      verify_enumeration(v, tuples.size());
      verify_groups(v, group_closure(m));
      verify_orbits(v, part);
    }
    return render(f, orbits_json(part, order, m), orbits_md(part, order), orbits_csv(part));
  }
  if (cmd == "report") {
    const FullReport r = build_full_report(cfg.threads);
    if (cfg.verify) verify_full_report(v, r);
    if (f == Format::kCsv) throw std::invalid_argument("report: csv format is not supported");
    return f == Format::kJson ? dump_json(full_report_json(r)) : full_report_md(r);
  }

  const SixTuple t = parse_six_tuple(*cfg.tuple, m);
  require_admissible(t, m, cmd.c_str());
  if (cmd == "invariants") {
    const auto inv = invariants(t, m);
    if (cfg.verify) verify_invariants(v, t, inv, m);
    return render(f, invariants_json(inv), invariants_md(t, inv), invariants_csv(inv));
  }
  if (cmd == "sheaf-table") {
    if (cfg.verify) verify_sheaf_table(v, t, m);
    return render(f, sheaf_table_json(t, m), sheaf_table_md(t, m), sheaf_table_csv(t, m));
  }
  if (cmd == "canonical") {
    const auto rep = degree_certificate(t, m);
    if (cfg.verify) verify_canonical(v, rep, m);
    return render(f, canonical_json(rep), canonical_md(rep), canonical_csv(rep));
  }
  if (cmd == "equations") {
    const auto rels = cover_equations(t, m);
    if (cfg.verify) {
      const std::size_t k = static_cast<std::size_t>(m.n() * m.n() - 1);
      v.expect_eq("number of relations", rels.size(), k * (k + 1) / 2);
    }
    return render(f, equations_json(rels), equations_text(rels), equations_csv(rels));
  }
  throw std::invalid_argument("unknown command '" + cmd + "'");
}

}  // namespace detail

// Runs one subcommand. Exit status: 0 success, 1 bad input or unsupported
// request, 2 golden-data mismatch under --verify.
inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    if (std::find(commands().begin(), commands().end(), cfg.command) == commands().end())
      throw std::invalid_argument("unknown command '" + cfg.command + "'");
    if (needs_tuple(cfg.command) && !cfg.tuple)
      throw std::invalid_argument(cfg.command + " needs a tuple of 12 residues");
    const ZMod m(cfg.modulus);
    if (!m.is_prime())
      throw std::invalid_argument("modulus " + std::to_string(cfg.modulus) + " is not prime");
    if (cfg.verify && m != kZ5)
      throw std::invalid_argument("--verify: golden data exists only for modulus 5");
    if (cfg.command == "report" && m != kZ5)
      throw std::invalid_argument("report is only defined for modulus 5");
    report::Verifier v;
    res.output = detail::run_command(cfg, m, v);
    if (!v.ok()) {
      res.status = kVerifyFailed;
      for (const auto& f : v.failures()) res.errors.push_back("verify mismatch: " + f);
    }
  } catch (const std::exception& e) {
    res.status = kUsageError;
    res.output.clear();
    res.errors.push_back(e.what());
  }
  return res;
}

}  // namespace quadcover::cli

#endif  // QUADCOVER_CLI_HPP_
