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

// The action of GL(2, Z/n) x S5 on six-tuples, realized as 12x12 matrices,
// and orbit partitioning by breadth-first search over a generator set.

#ifndef QUADCOVER_SYMMETRY_HPP_
#define QUADCOVER_SYMMETRY_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "quadcover/covers.hpp"
#include "quadcover/gf5core.hpp"

namespace quadcover {

struct SymmetryElement {
  FMat12 mat;
  std::optional<FMat2> gl2;  // set for pure GL(2) elements
  std::vector<int> word;     // transposition indices 1..4, applied in order
  std::string name;

  SixTuple apply(const SixTuple& t) const {
    return SixTuple::from_vec12(mat.apply(t.to_vec12()));
  }
};

namespace detail {

using SlotMatrix = std::array<std::array<int, 6>, 6>;

// Slots: 0..2 = u1..u3, 3..5 = v1..v3. Row i lists the input slots summed
// into output slot i.
inline SlotMatrix slot_matrix(const std::array<std::vector<int>, 6>& rows) {
  SlotMatrix m{};
  for (int i = 0; i < 6; ++i)
    for (int s : rows[i]) m[i][s] += 1;
  return m;
}

// The transposition formulas are involutions on the hyperplane W where the
// six slots sum to zero. Extend by the identity on the complement spanned by
// the v3 slot: M' = M (I - P) + P, with P x = (0, ..., 0, sum of slots).
inline FMat12 extend_from_sum_zero(const SlotMatrix& formula, ZMod m) {
  SlotMatrix p{};
  for (int j = 0; j < 6; ++j) p[5][j] = 1;
  SlotMatrix out{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int acc = p[i][j];
      for (int k = 0; k < 6; ++k) {
        const int ikj = (k == j ? 1 : 0) - p[k][j];
        acc += formula[i][k] * ikj;
      }
      out[i][j] = m.reduce(acc);
    }
  return FMat12::kron(out, FMat2::identity(), m);
}

}  // namespace detail

// The four transpositions (01), (02), (03), (04) generating the S5 action.
inline std::array<SymmetryElement, 4> s5_generators(ZMod m = kZ5) {
  enum { U1, U2, U3, V1, V2, V3 };
  const std::array<std::array<std::vector<int>, 6>, 4> formulas = {{
      {{{U1}, {U3, V1, V2}, {U2, V1, V3}, {U1, U2, U3}, {V2}, {V3}}},
      {{{U3, V1, V2}, {U2}, {U1, V2, V3}, {V1}, {U1, U2, U3}, {V3}}},
      {{{U2, V1, V3}, {U1, V2, V3}, {U3}, {V1}, {V2}, {U1, U2, U3}}},
      {{{U1}, {U2}, {U3}, {U1, V2, V3}, {U2, V1, V3}, {U3, V1, V2}}},
  }};
  std::array<SymmetryElement, 4> out{
      SymmetryElement{FMat12(m), std::nullopt, {}, {}},
      SymmetryElement{FMat12(m), std::nullopt, {}, {}},
      SymmetryElement{FMat12(m), std::nullopt, {}, {}},
      SymmetryElement{FMat12(m), std::nullopt, {}, {}}};
  for (int g = 0; g < 4; ++g) {
    out[g].mat = detail::extend_from_sum_zero(detail::slot_matrix(formulas[g]), m);
    out[g].word = {g + 1};
    out[g].name = "(0" + std::to_string(g + 1) + ")";
  }
  return out;
}

// Block-diagonal action of an invertible 2x2 matrix on all six slots.
inline SymmetryElement gl2_action(const FMat2& g, ZMod m = kZ5) {
  if (!g.is_invertible(m)) {
    throw std::invalid_argument("gl2_action: matrix is singular mod " +
                                std::to_string(m.n()));
  }
  detail::SlotMatrix id{};
  for (int i = 0; i < 6; ++i) id[i][i] = 1;
  return {FMat12::kron(id, g, m), g, {},
          "[" + std::to_string(g.a[0]) + "," + std::to_string(g.a[1]) + ";" +
              std::to_string(g.a[2]) + "," + std::to_string(g.a[3]) + "]"};
}

// Two transvections and diag(g, 1) with g a primitive root; they generate
// GL(2, Z/n) for prime n.
inline std::vector<SymmetryElement> gl2_generators(ZMod m = kZ5) {
  return {gl2_action(FMat2{{1, 1, 0, 1}}, m), gl2_action(FMat2{{1, 0, 1, 1}}, m),
          gl2_action(FMat2{{m.primitive_root(), 0, 0, 1}}, m)};
}

// Transpositions followed by the GL(2) generators.
inline std::vector<SymmetryElement> symmetry_generators(ZMod m = kZ5) {
  std::vector<SymmetryElement> gens;
  for (auto& g : s5_generators(m)) gens.push_back(g);
  for (auto& g : gl2_generators(m)) gens.push_back(g);
  return gens;
}

struct GroupClosure {
  std::size_t order = 0;
  std::vector<FMat12> elements;  // identity first, then BFS order
};

// Closure of a set of invertible matrices under multiplication.
inline GroupClosure closure(std::span<const FMat12> gens) {
  if (gens.empty()) return {1, {}};
  const ZMod m = gens.front().modulus();
  GroupClosure out;
  std::unordered_set<FMat12, FMat12Hash> seen;
  out.elements.push_back(FMat12::identity(m));
  seen.insert(out.elements.front());
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const FMat12& g : gens) {
      FMat12 next = out.elements[head] * g;
      if (seen.insert(next).second) out.elements.push_back(std::move(next));
    }
  }
  out.order = out.elements.size();
  return out;
}

inline GroupClosure closure(std::span<const SymmetryElement> gens) {
  std::vector<FMat12> mats;
  for (const auto& g : gens) mats.push_back(g.mat);
  return closure(mats);
}

struct SymmetryGroups {
  GroupClosure s5;    // transpositions only
  GroupClosure full;  // transpositions and GL(2) generators
};

inline SymmetryGroups group_closure(ZMod m = kZ5) {
  const auto s5 = s5_generators(m);
  return {closure(std::span<const SymmetryElement>(s5)),
          closure(std::span<const SymmetryElement>(symmetry_generators(m)))};
}

// |GL(2, Z/n)| * |S5| for prime n.
inline std::size_t symmetry_group_order(ZMod m = kZ5) {
  const std::size_t n = static_cast<std::size_t>(m.n());
  return (n * n - 1) * (n * n - n) * 120;
}

struct OrbitInfo {
  int id = 0;
  SixTuple representative;  // lexicographically minimal member
  std::size_t size = 0;
  std::size_t stabilizer_order = 0;
  std::optional<int> label;  // 1..4 when a listed representative lies here
};

class OrbitPartition;

// Partition a set closed under the action into orbits. Orbits are numbered
// by their lexicographically minimal member. Throws if a generator leaves
// the set.
inline OrbitPartition orbits(std::span<const SixTuple> tuples,
                             std::span<const SymmetryElement> gens,
                             std::size_t group_order, ZMod m = kZ5);

class OrbitPartition {
 public:
  OrbitPartition() = default;

  const std::vector<OrbitInfo>& orbits() const { return orbits_; }
  std::size_t num_tuples() const { return keys_.size(); }

  // Orbit id of a member tuple; nullopt if the tuple is not in the set.
  std::optional<int> orbit_of(const SixTuple& t) const {
    const auto k = t.key(mod_);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k) return std::nullopt;
    return orbit_id_[static_cast<std::size_t>(it - keys_.begin())];
  }

 private:
  friend OrbitPartition quadcover::orbits(std::span<const SixTuple>,
                               std::span<const SymmetryElement>, std::size_t,
                               ZMod);

  ZMod mod_;
  std::vector<std::uint64_t> keys_;  // sorted
  std::vector<int> orbit_id_;
  std::vector<OrbitInfo> orbits_;
};

inline OrbitPartition orbits(std::span<const SixTuple> tuples,
                             std::span<const SymmetryElement> gens,
                             std::size_t group_order, ZMod m) {
  OrbitPartition part;
  part.mod_ = m;
  std::vector<SixTuple> sorted(tuples.begin(), tuples.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  part.keys_.reserve(sorted.size());
  for (const auto& t : sorted) part.keys_.push_back(t.key(m));
  part.orbit_id_.assign(sorted.size(), -1);

  auto index_of = [&](const SixTuple& t) {
    const auto k = t.key(m);
    auto it = std::lower_bound(part.keys_.begin(), part.keys_.end(), k);
    if (it == part.keys_.end() || *it != k) {
      throw std::runtime_error("orbits: generator maps a member outside the set: " +
                               to_string(t));
    }
    return static_cast<std::size_t>(it - part.keys_.begin());
  };

  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < sorted.size(); ++start) {
    if (part.orbit_id_[start] >= 0) continue;
    const int id = static_cast<int>(part.orbits_.size());
    queue.assign(1, start);
    part.orbit_id_[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vec12 x = sorted[queue[head]].to_vec12();
      for (const auto& g : gens) {
        const std::size_t j = index_of(SixTuple::from_vec12(g.mat.apply(x)));
        if (part.orbit_id_[j] < 0) {
          part.orbit_id_[j] = id;
          queue.push_back(j);
        }
      }
    }
    OrbitInfo info;
    info.id = id;
    info.representative = sorted[start];
    info.size = queue.size();
    if (group_order % info.size != 0) {
      throw std::runtime_error("orbit size " + std::to_string(info.size) +
                               " does not divide the group order");
    }
    info.stabilizer_order = group_order / info.size;
    part.orbits_.push_back(info);
  }

  if (m == kZ5) {
    for (int label = 1; label <= 4; ++label) {
      if (auto id = part.orbit_of(reference_representative(label))) {
        auto& info = part.orbits_[static_cast<std::size_t>(*id)];
        if (!info.label) info.label = label;
      }
    }
  }
  return part;
}

}  // namespace quadcover

#endif  // QUADCOVER_SYMMETRY_HPP_
