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

// Machine-readable (JSON, CSV) and human-readable (markdown) renderings of
// every pipeline stage, and comparison against the embedded golden data.
// All output is deterministic: fixed key order, fixed iteration order.

#ifndef QUADCOVER_REPORT_HPP_
#define QUADCOVER_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quadcover/canonical.hpp"
#include "quadcover/covers.hpp"
#include "quadcover/golden.hpp"
#include "quadcover/picard.hpp"
#include "quadcover/sheaves.hpp"
#include "quadcover/symmetry.hpp"

namespace quadcover::report {

using Json = nlohmann::ordered_json;

// "3H - E0 - 2E1 - E2 - E3"; the zero class is "0".
inline std::string format_class(const DivClass& c) {
  std::string out;
  auto term = [&](long long coeff, const std::string& name) {
    if (coeff == 0) return;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    const long long mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += name;
  };
  term(c.h(), "H");
  for (int i = 0; i < 4; ++i) term(c.e(i), "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

inline std::string chi_key(FVec2 chi) {
  return std::to_string(chi.x) + "," + std::to_string(chi.y);
}

inline Json class_json(const DivClass& c) {
  return Json::array({c.c[0], c.c[1], c.c[2], c.c[3], c.c[4]});
}

inline std::optional<int> reference_label_of(const SixTuple& t, ZMod m) {
  if (m != kZ5) return std::nullopt;
  for (int l = 1; l <= 4; ++l)
    if (reference_representative(l) == t) return l;
  return std::nullopt;
}

inline const std::vector<std::string>& loop_names() {
  static const std::vector<std::string> names = {"l1'", "l2'", "l3'", "l1", "l2",
                                                 "l3",  "e0",  "e1",  "e2", "e3"};
  return names;
}

// ---------------------------------------------------------------- homology

inline std::string relation_text(const std::vector<long long>& rel) {
  std::string lhs, rhs;
  for (int i = 0; i < kNumCurves; ++i) {
    if (rel[i] == 0) continue;
    std::string& side = rel[i] > 0 && i >= 6 ? lhs : rhs;
    if (!side.empty()) side += " + ";
    side += loop_names()[i];
  }
  if (lhs.empty()) return rhs + " = 0";
  return lhs + " = " + rhs;
}

inline Json homology_json(const HomologyPresentation& h) {
  const auto& cfg = configuration();
  Json curves = Json::array();
  for (const auto& c : cfg.curves()) curves.push_back(c.label);
  Json rows = Json::array();
  for (const auto& r : h.restriction) rows.push_back(r);
  Json rels = Json::array();
  for (const auto& r : h.relations)
    rels.push_back({{"relation", relation_text(r)}, {"vector", r}, {"holds", h.is_relation(r)}});
  return {{"rank", h.rank},
          {"torsion", h.torsion},
          {"invariant_factors", h.smith.invariant_factors},
          {"intersection_table",
           {{"curves", curves}, {"basis", {"H", "E0", "E1", "E2", "E3"}}, {"rows", rows}}},
          {"relations", rels}};
}

inline std::string homology_md(const HomologyPresentation& h) {
  const auto& cfg = configuration();
  std::ostringstream os;
  os << "## First homology of the complement\n\n";
  os << "|      | H | E0 | E1 | E2 | E3 |\n|------|---|----|----|----|----|\n";
  for (int i = 0; i < kNumCurves; ++i) {
    os << "| " << cfg.curve(i).label << " |";
    for (long long v : h.restriction[i]) os << ' ' << v << " |";
    os << '\n';
  }
  os << "\nSmith invariant factors:";
  for (long long f : h.smith.invariant_factors) os << ' ' << f;
  os << "\n\nH_1(Y - D, Z) is free of rank " << h.rank;
  if (h.torsion.empty()) {
    os << " (no torsion).\n\n";
  } else {
    os << " with torsion";
    for (long long t : h.torsion) os << " Z/" << t;
    os << ".\n\n";
  }
  os << "Relations:\n\n";
  for (const auto& r : h.relations)
    os << "- " << relation_text(r) << (h.is_relation(r) ? "" : "  (FAILS)") << '\n';
  return os.str();
}

inline std::string homology_csv(const HomologyPresentation& h) {
  const auto& cfg = configuration();
  std::ostringstream os;
  os << "curve,H,E0,E1,E2,E3\n";
  for (int i = 0; i < kNumCurves; ++i) {
    os << cfg.curve(i).label;
    for (long long v : h.restriction[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------- enumeration

inline Json enumeration_json(const std::vector<SixTuple>& tuples, ZMod m, bool dump) {
  Json out = {{"modulus", m.n()}, {"count", tuples.size()}};
  if (dump) {
    Json arr = Json::array();
    for (const auto& t : tuples) arr.push_back(to_string(t));
    out["tuples"] = std::move(arr);
  }
  return out;
}

inline std::string enumeration_md(const std::vector<SixTuple>& tuples, ZMod m, bool dump) {
  std::ostringstream os;
  os << "| modulus | admissible six-tuples |\n|---|---|\n| " << m.n() << " | "
     << tuples.size() << " |\n";
  if (dump) {
    os << '\n';
    for (const auto& t : tuples) os << "- " << to_string(t) << '\n';
  }
  return os.str();
}

inline std::string enumeration_csv(const std::vector<SixTuple>& tuples, bool dump) {
  std::ostringstream os;
  if (!dump) {
    os << "count\n" << tuples.size() << '\n';
    return os.str();
  }
  os << "x1,y1,x2,y2,x3,y3,z1,w1,z2,w2,z3,w3\n";
  for (const auto& t : tuples) os << to_string(t) << '\n';
  return os.str();
}

// ------------------------------------------------------------------ orbits

inline std::string label_name(std::optional<int> label) {
  return label ? "U" + std::to_string(*label) : std::string{};
}

inline Json orbits_json(const OrbitPartition& part, std::size_t group_order, ZMod m) {
  Json arr = Json::array();
  for (const auto& o : part.orbits()) {
    Json j = {{"id", o.id},
              {"size", o.size},
              {"stabilizer_order", o.stabilizer_order},
              {"representative", to_string(o.representative)}};
    if (o.label) {
      j["label"] = label_name(o.label);
      j["reference_representative"] = to_string(reference_representative(*o.label));
    } else {
      j["label"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return {{"modulus", m.n()},
          {"group_order", group_order},
          {"tuples", part.num_tuples()},
          {"orbits", arr}};
}

inline std::string orbits_md(const OrbitPartition& part, std::size_t group_order) {
  std::ostringstream os;
  os << "## Orbits of the symmetry group (order " << group_order << ") on "
     << part.num_tuples() << " admissible six-tuples\n\n";
  os << "| orbit | size | stabilizer | lex-minimal representative | label | "
        "listed representative |\n|---|---|---|---|---|---|\n";
  for (const auto& o : part.orbits()) {
    os << "| " << o.id << " | " << o.size << " | " << o.stabilizer_order << " | "
       << to_string(o.representative) << " | " << label_name(o.label) << " | "
       << (o.label ? to_string(reference_representative(*o.label)) : "") << " |\n";
  }
  return os.str();
}

inline std::string orbits_csv(const OrbitPartition& part) {
  std::ostringstream os;
  os << "id,size,stabilizer_order,representative,label\n";
  for (const auto& o : part.orbits()) {
    os << o.id << ',' << o.size << ',' << o.stabilizer_order << ",\""
       << to_string(o.representative) << "\"," << label_name(o.label) << '\n';
  }
  return os.str();
}

inline Json group_json(const SymmetryGroups& g) {
  return {{"s5_order", g.s5.order}, {"group_order", g.full.order}};
}

// -------------------------------------------------------------- invariants

inline Json invariants_json(const SurfaceInvariants& inv) {
  return {{"k2", inv.k2}, {"chi", inv.chi_O}, {"pg", inv.pg}, {"q", inv.q}};
}

inline std::string invariants_md(const SixTuple& t, const SurfaceInvariants& inv) {
  std::ostringstream os;
  os << "Invariants of the cover given by " << to_string(t) << ":\n\n"
     << "| K^2 | chi | p_g | q |\n|---|---|---|---|\n| " << inv.k2 << " | " << inv.chi_O
     << " | " << inv.pg << " | " << inv.q << " |\n";
  return os.str();
}

inline std::string invariants_csv(const SurfaceInvariants& inv) {
  std::ostringstream os;
  os << "k2,chi,pg,q\n" << inv.k2 << ',' << inv.chi_O << ',' << inv.pg << ',' << inv.q << '\n';
  return os.str();
}

inline Json ramification_json(const std::array<RamificationNumbers, kNumCurves>& ram) {
  Json arr = Json::array();
  for (int i = 0; i < kNumCurves; ++i) {
    arr.push_back({{"curve", "R" + std::to_string(i + 1)},
                   {"over", configuration().curve(i).label},
                   {"selfint", ram[i].selfint},
                   {"kdot", ram[i].kdot},
                   {"genus", ram[i].genus}});
  }
  return arr;
}

inline std::string ramification_md(const std::array<RamificationNumbers, kNumCurves>& ram) {
  std::ostringstream os;
  os << "| curve | over | R^2 | K.R | genus |\n|---|---|---|---|---|\n";
  for (int i = 0; i < kNumCurves; ++i) {
    os << "| R" << i + 1 << " | " << configuration().curve(i).label << " | "
       << ram[i].selfint << " | " << ram[i].kdot << " | " << ram[i].genus << " |\n";
  }
  return os.str();
}

// ------------------------------------------------------------ sheaf table

inline Json sheaf_table_json(const SixTuple& t, ZMod m) {
  const DivClass k = canonical_class();
  Json out = Json::object();
  for (const auto& s : sheaf_table(t, m)) {
    out["(" + chi_key(s.chi) + ")"] = {{"class", class_json(s.cls)},
                                       {"text", format_class(s.cls)},
                                       {"h0_KY_plus_L", h0(k + s.cls)}};
  }
  return out;
}

inline std::string sheaf_table_md(const SixTuple& t, ZMod m) {
  const auto table = sheaf_table(t, m);
  const int n = m.n();
  std::ostringstream os;
  os << "| L_(a,b) |";
  for (int a = 0; a < n; ++a) os << " a = " << a << " |";
  os << "\n|---|";
  for (int a = 0; a < n; ++a) os << "---|";
  os << '\n';
  for (int b = 0; b < n; ++b) {
    os << "| b = " << b << " |";
    for (int a = 0; a < n; ++a) {
      const auto& cls = table[static_cast<std::size_t>(b * n + a)].cls;
      os << ' ' << (cls == DivClass{} ? std::string("O_Y") : format_class(cls)) << " |";
    }
    os << '\n';
  }
  return os.str();
}

inline std::string sheaf_table_csv(const SixTuple& t, ZMod m) {
  const DivClass k = canonical_class();
  std::ostringstream os;
  os << "a,b,h,e0,e1,e2,e3,h0_KY_plus_L\n";
  for (const auto& s : sheaf_table(t, m)) {
    os << s.chi.x << ',' << s.chi.y;
    for (long long v : s.cls.c) os << ',' << v;
    os << ',' << h0(k + s.cls) << '\n';
  }
  return os.str();
}

// Residues delta/lambda/mu for the characters contributing to p_g.
inline std::string coefficient_table_md(const SixTuple& t, ZMod m) {
  std::ostringstream os;
  os << "| (a,b) | d1 | d2 | d3 | l1 | l2 | l3 | m0 | m1 | m2 | m3 |\n"
        "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : basis(t, m).entries) {
    os << "| (" << chi_key(e.chi) << ") |";
    for (int c : coeffs(t, e.chi, m)) os << ' ' << c << " |";
    os << '\n';
  }
  return os.str();
}

inline Json coefficient_table_json(const SixTuple& t, ZMod m) {
  Json out = Json::object();
  for (const auto& e : basis(t, m).entries) out[chi_key(e.chi)] = coeffs(t, e.chi, m);
  return out;
}

// --------------------------------------------------------------- canonical

inline std::string monomial_text(const ExponentVector& e) {
  std::string out;
  for (int i = 0; i < kNumCurves; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

inline Json type_json(const BasePointType& t) {
  Json j = {{"multiplicity", t.multiplicity}};
  Json kids = Json::array();
  for (const auto& c : t.infinitely_near) kids.push_back(type_json(c));
  j["infinitely_near"] = kids;
  return j;
}

inline Json canonical_json(const CanonicalReport& rep) {
  Json basis_arr = Json::array();
  for (const auto& e : rep.basis.entries) {
    basis_arr.push_back({{"chi", chi_key(e.chi)},
                         {"exponents", e.exponents},
                         {"monomial", monomial_text(e.exponents)},
                         {"dimension", e.dimension}});
  }
  Json bps = Json::array();
  for (const auto& bp : rep.base_points) {
    Json gens = Json::array();
    for (const auto& [a, b] : bp.ideal.generators()) gens.push_back({a, b});
    bps.push_back({{"pair", {bp.pair.first + 1, bp.pair.second + 1}},
                   {"ideal", to_string(bp.ideal)},
                   {"generators", gens},
                   {"type", bp.type.sequence()},
                   {"chain", bp.type.is_chain()},
                   {"tree", type_json(bp.type)},
                   {"square_sum", bp.type.square_sum()}});
  }
  return {{"tuple", to_string(rep.tuple)},
          {"basis", basis_arr},
          {"fixed_part", rep.fixed_part},
          {"fixed_divisor", monomial_text(rep.fixed_part)},
          {"base_points", bps},
          {"k2", rep.k2},
          {"moving_selfint", rep.moving_selfint},
          {"type_square_sum", rep.type_square_sum},
          {"degree_product", rep.degree_product},
          {"birational", rep.birational},
          {"justification", rep.justification},
          {"unexpected_branching", rep.unexpected_branching}};
}

inline std::string fixed_divisor_text(const ExponentVector& f) {
  std::string out;
  for (int i = 0; i < kNumCurves; ++i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (f[i] > 1) out += std::to_string(f[i]);
    out += "R" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

inline std::string canonical_md(const CanonicalReport& rep) {
  std::ostringstream os;
  os << "## Canonical map of the cover given by " << to_string(rep.tuple) << "\n\n";
  os << "Basis of H^0(K_S), one monomial per contributing character:\n\n";
  for (const auto& e : rep.basis.entries)
    os << "- (" << chi_key(e.chi) << "): " << monomial_text(e.exponents) << '\n';
  os << "\nFixed part: " << fixed_divisor_text(rep.fixed_part) << ".\n\n";
  os << "Base points of the moving part:\n\n| point | local ideal | type |\n|---|---|---|\n";
  for (const auto& bp : rep.base_points) {
    os << "| R" << bp.pair.first + 1 << " ∩ R" << bp.pair.second + 1 << " | "
       << to_string(bp.ideal) << " | " << to_string(bp.type) << " |\n";
  }
  os << "\n(K - F)^2 = " << rep.moving_selfint << ", sum of squared multiplicities = "
     << rep.type_square_sum << ", so deg(phi_K) * deg(image) = " << rep.degree_product
     << ".\n\n";
  os << "Birational: " << (rep.birational ? "yes" : "undecided") << " ("
     << rep.justification << ")";
  if (rep.birational) os << "; canonical image of degree " << rep.degree_product << " in P^3";
  os << ".\n";
  if (rep.unexpected_branching) os << "\nWARNING: a base point resolves to a branching tree.\n";
  return os.str();
}

inline std::string canonical_csv(const CanonicalReport& rep) {
  std::ostringstream os;
  os << "curve_i,curve_j,ideal,type,square_sum\n";
  for (const auto& bp : rep.base_points) {
    os << bp.pair.first + 1 << ',' << bp.pair.second + 1 << ",\"" << to_string(bp.ideal)
       << "\",\"" << to_string(bp.type) << "\"," << bp.type.square_sum() << '\n';
  }
  return os.str();
}

// --------------------------------------------------------------- equations

inline Json equations_json(const std::vector<CoverRelation>& rels) {
  Json arr = Json::array();
  for (const auto& r : rels) {
    arr.push_back({{"lhs", {chi_key(r.lhs1), chi_key(r.lhs2)}},
                   {"sigma_exponents", r.sigma_exponents},
                   {"rhs", chi_key(r.rhs)}});
  }
  return arr;
}

inline std::string equations_text(const std::vector<CoverRelation>& rels) {
  std::string out;
  for (const auto& r : rels) out += to_string(r) + "\n";
  return out;
}

inline std::string equations_csv(const std::vector<CoverRelation>& rels) {
  std::ostringstream os;
  os << "a,b,c,d,eps1,eps2,eps3,eps4,eps5,eps6,eps7,eps8,eps9,eps10,rhs_a,rhs_b\n";
  for (const auto& r : rels) {
    os << r.lhs1.x << ',' << r.lhs1.y << ',' << r.lhs2.x << ',' << r.lhs2.y;
    for (int e : r.sigma_exponents) os << ',' << e;
    os << ',' << r.rhs.x << ',' << r.rhs.y << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------ golden data

inline const nlohmann::json& golden() {
  static const nlohmann::json g = nlohmann::json::parse(kGoldenJson);
  return g;
}

// Collects mismatches against the golden data.
class Verifier {
 public:
  template <typename A, typename B>
  void expect_eq(const std::string& what, const A& actual, const B& expected) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << Json(actual).dump() << ", expected " << Json(expected).dump();
      failures_.push_back(os.str());
    }
  }
  void expect(const std::string& what, bool ok) {
    if (!ok) failures_.push_back(what);
  }

  const std::vector<std::string>& failures() const { return failures_; }
  bool ok() const { return failures_.empty(); }

 private:
  std::vector<std::string> failures_;
};

inline void verify_enumeration(Verifier& v, std::size_t count) {
  v.expect_eq("admissible count", count, golden()["admissible_count"].get<std::size_t>());
}

inline void verify_orbits(Verifier& v, const OrbitPartition& part) {
  std::vector<std::size_t> sizes;
  for (const auto& o : part.orbits()) sizes.push_back(o.size);
  std::sort(sizes.begin(), sizes.end());
  v.expect_eq("orbit sizes", sizes, golden()["orbit_sizes"].get<std::vector<std::size_t>>());
  std::vector<int> ids;
  for (int l = 1; l <= 4; ++l) {
    const auto id = part.orbit_of(reference_representative(l));
    v.expect("U" + std::to_string(l) + " lies in the enumerated set", id.has_value());
    if (!id) continue;
    ids.push_back(*id);
    v.expect_eq("orbit size of U" + std::to_string(l),
                part.orbits()[static_cast<std::size_t>(*id)].size,
                golden()["orbit_size_by_label"]["U" + std::to_string(l)].get<std::size_t>());
  }
  std::sort(ids.begin(), ids.end());
  v.expect("U1..U4 lie in pairwise distinct orbits",
           std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

inline void verify_groups(Verifier& v, const SymmetryGroups& g) {
  v.expect_eq("S5 closure order", g.s5.order, golden()["s5_order"].get<std::size_t>());
  v.expect_eq("group order", g.full.order, golden()["group_order"].get<std::size_t>());
}

inline void verify_homology(Verifier& v, const HomologyPresentation& h) {
  v.expect_eq("H_1 rank", h.rank, golden()["homology"]["rank"].get<int>());
  v.expect_eq("H_1 torsion", h.torsion,
              golden()["homology"]["torsion"].get<std::vector<long long>>());
  for (const auto& r : h.relations) v.expect("relation " + relation_text(r), h.is_relation(r));
}

inline void verify_invariants(Verifier& v, const SixTuple& t, const SurfaceInvariants& inv,
                              ZMod m) {
  v.expect_eq("K^2", inv.k2, golden()["k2"].get<long long>());
  v.expect_eq("chi", inv.chi_O, golden()["chi"].get<long long>());
  if (auto label = reference_label_of(t, m)) {
    const auto& g = golden()["invariants"]["U" + std::to_string(*label)];
    const Json actual = invariants_json(inv);
    for (const auto& [key, val] : g.items())
      v.expect_eq("U" + std::to_string(*label) + " " + key, actual[key].get<long long>(),
                  val.get<long long>());
  }
}

inline void verify_ramification(Verifier& v,
                                const std::array<RamificationNumbers, kNumCurves>& ram) {
  const auto& g = golden()["ramification"];
  for (int i = 0; i < kNumCurves; ++i) {
    const std::string c = "R" + std::to_string(i + 1);
    v.expect_eq(c + " self-intersection", ram[i].selfint, g["selfint"].get<long long>());
    v.expect_eq(c + " K.R", ram[i].kdot, g["kdot"].get<long long>());
    v.expect_eq(c + " genus", ram[i].genus, g["genus"].get<long long>());
  }
}

inline void verify_sheaf_table(Verifier& v, const SixTuple& t, ZMod m) {
  if (reference_label_of(t, m) != 3) return;
  const auto table = sheaf_table(t, m);
  const auto& g = golden()["sheaf_table_U3"];
  for (const auto& s : table) {
    const auto expected = g[static_cast<std::size_t>(s.chi.y)][static_cast<std::size_t>(s.chi.x)]
                              .get<std::vector<long long>>();
    v.expect_eq("L_(" + chi_key(s.chi) + ")",
                std::vector<long long>(s.cls.c.begin(), s.cls.c.end()), expected);
  }
  for (const auto& [key, val] : golden()["coefficients_U3"].items()) {
    const FVec2 chi{key[0] - '0', key[2] - '0'};
    const CoeffVector c = coeffs(t, chi, m);
    v.expect_eq("coefficients (" + key + ")", std::vector<int>(c.begin(), c.end()),
                val.get<std::vector<int>>());
  }
}

inline void verify_canonical(Verifier& v, const CanonicalReport& rep, ZMod m) {
  if (reference_label_of(rep.tuple, m) != 3) return;
  const auto& g = golden()["canonical_U3"];
  Json basis_actual = Json::object();
  for (const auto& e : rep.basis.entries) basis_actual[chi_key(e.chi)] = e.exponents;
  v.expect_eq("canonical basis", nlohmann::json(basis_actual), g["basis"]);
  v.expect_eq("fixed part", std::vector<int>(rep.fixed_part.begin(), rep.fixed_part.end()),
              g["fixed_part"].get<std::vector<int>>());
  nlohmann::json bps = nlohmann::json::array();
  for (const auto& bp : rep.base_points)
    bps.push_back({{"pair", {bp.pair.first + 1, bp.pair.second + 1}},
                   {"type", bp.type.sequence()}});
  v.expect_eq("base points", bps, g["base_points"]);
  v.expect_eq("moving self-intersection", rep.moving_selfint,
              g["moving_selfint"].get<long long>());
  v.expect_eq("type square sum", rep.type_square_sum, g["type_square_sum"].get<int>());
  v.expect_eq("degree product", rep.degree_product, g["degree_product"].get<long long>());
  v.expect_eq("birational", rep.birational, g["birational"].get<bool>());
}

// ----------------------------------------------------------------- bundle

struct FullReport {
  HomologyPresentation homology;
  std::vector<SixTuple> admissible;
  SymmetryGroups groups;
  OrbitPartition partition;
  std::array<SurfaceInvariants, 4> invariants{};
  std::array<RamificationNumbers, kNumCurves> ramification{};
  CanonicalReport canonical;
};

inline FullReport build_full_report(int threads = 0) {
  FullReport r;
  r.homology = h1_complement();
  r.admissible = enumerate_admissible(kZ5, threads);
  r.groups = group_closure(kZ5);
  r.partition = orbits(r.admissible, symmetry_generators(kZ5), r.groups.full.order, kZ5);
  for (int l = 1; l <= 4; ++l)
    r.invariants[static_cast<std::size_t>(l - 1)] = invariants(reference_representative(l));
  r.ramification = ram_curve_numbers(reference_representative(3));
  r.canonical = degree_certificate(reference_representative(3));
  return r;
}

inline void verify_full_report(Verifier& v, const FullReport& r) {
  verify_homology(v, r.homology);
  verify_enumeration(v, r.admissible.size());
  verify_groups(v, r.groups);
  verify_orbits(v, r.partition);
  for (int l = 1; l <= 4; ++l)
    verify_invariants(v, reference_representative(l), r.invariants[static_cast<std::size_t>(l - 1)],
                      kZ5);
  verify_ramification(v, r.ramification);
  verify_sheaf_table(v, reference_representative(3), kZ5);
  verify_canonical(v, r.canonical, kZ5);
}

inline Json full_report_json(const FullReport& r) {
  Json inv = Json::object();
  for (int l = 1; l <= 4; ++l) {
    inv["U" + std::to_string(l)] = {
        {"tuple", to_string(reference_representative(l))},
        {"invariants", invariants_json(r.invariants[static_cast<std::size_t>(l - 1)])}};
  }
  const SixTuple& u3 = reference_representative(3);
  return {{"homology", homology_json(r.homology)},
          {"enumeration", enumeration_json(r.admissible, kZ5, false)},
          {"groups", group_json(r.groups)},
          {"orbits", orbits_json(r.partition, r.groups.full.order, kZ5)},
          {"representatives", inv},
          {"sheaf_table_U3", sheaf_table_json(u3, kZ5)},
          {"coefficients_U3", coefficient_table_json(u3, kZ5)},
          {"ramification_U3", ramification_json(r.ramification)},
          {"canonical_U3", canonical_json(r.canonical)}};
}

inline std::string full_report_md(const FullReport& r) {
  const SixTuple& u3 = reference_representative(3);
  std::ostringstream os;
  os << "# (Z/5)^2-covers of the plane branched on a complete quadrangle\n\n";
  os << homology_md(r.homology) << '\n';
  os << "## Admissible six-tuples\n\n" << enumeration_md(r.admissible, kZ5, false) << '\n';
  os << "## Symmetry group\n\nClosure of the four transpositions: order " << r.groups.s5.order
     << ". Full group generated with GL(2, Z/5): order " << r.groups.full.order << ".\n\n";
  os << orbits_md(r.partition, r.groups.full.order) << '\n';
  os << "## Invariants of the four representatives\n\n"
     << "| label | tuple | K^2 | chi | p_g | q |\n|---|---|---|---|---|---|\n";
  for (int l = 1; l <= 4; ++l) {
    const auto& inv = r.invariants[static_cast<std::size_t>(l - 1)];
    os << "| U" << l << " | " << to_string(reference_representative(l)) << " | " << inv.k2 << " | "
       << inv.chi_O << " | " << inv.pg << " | " << inv.q << " |\n";
  }
  os << "\n## Character sheaves of U3\n\n" << sheaf_table_md(u3, kZ5) << '\n';
  os << "## Branch residues of the characters contributing to p_g(U3)\n\n"
     << coefficient_table_md(u3, kZ5) << '\n';
  os << "## Ramification curves of U3\n\n" << ramification_md(r.ramification) << '\n';
  os << canonical_md(r.canonical);
  return os.str();
}

}  // namespace quadcover::report

#endif  // QUADCOVER_REPORT_HPP_
