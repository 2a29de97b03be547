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

// Six-tuples (u1, u2, u3, v1, v2, v3): the images in (Z/n)^2 of the loops
// around L1', L2', L3', L1, L2, L3. The loops around the exceptional curves
// are determined by them:
//   e0 = u1 + u2 + u3,   e_i = u_i + v_j + v_k   ({i, j, k} = {1, 2, 3}).

#ifndef QUADCOVER_COVERS_HPP_
#define QUADCOVER_COVERS_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "quadcover/gf5core.hpp"
#include "quadcover/picard.hpp"

namespace quadcover {

struct SixTuple {
  std::array<FVec2, 6> slots{};

  const FVec2& u(int i) const { return slots[i - 1]; }  // i in 1..3
  const FVec2& v(int j) const { return slots[2 + j]; }  // j in 1..3

  Vec12 to_vec12() const {
    Vec12 out{};
    for (int s = 0; s < 6; ++s) {
      out[2 * s] = slots[s].x;
      out[2 * s + 1] = slots[s].y;
    }
    return out;
  }
  static SixTuple from_vec12(const Vec12& r) {
    SixTuple t;
    for (int s = 0; s < 6; ++s) t.slots[s] = {r[2 * s], r[2 * s + 1]};
    return t;
  }

  // Base-n packing of the twelve residues, most significant first; preserves
  // lexicographic order.
  std::uint64_t key(ZMod m = kZ5) const {
    std::uint64_t k = 0;
    for (int r : to_vec12()) k = k * static_cast<std::uint64_t>(m.n()) + r;
    return k;
  }

  friend auto operator<=>(const SixTuple&, const SixTuple&) = default;
};

// Twelve comma-separated residues in the order x1,y1,...,z3,w3.
inline std::string to_string(const SixTuple& t) {
  std::string out;
  for (int r : t.to_vec12()) {
    if (!out.empty()) out += ',';
    out += std::to_string(r);
  }
  return out;
}

inline SixTuple parse_six_tuple(std::string_view text, ZMod m = kZ5) {
  Vec12 r{};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw std::invalid_argument("bad residue '" + std::string(field) +
                                  "' in tuple '" + std::string(text) + "'");
    }
    if (value < 0 || value >= m.n()) {
      throw std::invalid_argument("residue " + std::to_string(value) +
                                  " outside 0.." + std::to_string(m.n() - 1));
    }
    if (count == 12) {
      throw std::invalid_argument("tuple has more than 12 residues");
    }
    r[count++] = value;
    pos = comma + 1;
  }
  if (count != 12) {
    throw std::invalid_argument("tuple needs 12 residues, got " +
                                std::to_string(count));
  }
  return SixTuple::from_vec12(r);
}

inline SixTuple make_tuple(std::array<FVec2, 6> slots) { return {slots}; }

// The four orbit representatives U1..U4 (modulus 5).
inline const std::array<SixTuple, 4>& reference_representatives() {
  static const std::array<SixTuple, 4> reps = {
      make_tuple({{{1, 0}, {1, 0}, {0, 1}, {2, 1}, {2, 1}, {4, 2}}}),
      make_tuple({{{1, 0}, {1, 0}, {0, 1}, {2, 1}, {4, 2}, {2, 1}}}),
      make_tuple({{{1, 0}, {1, 0}, {0, 1}, {4, 1}, {3, 2}, {1, 1}}}),
      make_tuple({{{1, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 3}, {2, 0}}}),
  };
  return reps;
}

inline const SixTuple& reference_representative(int label) {
  return reference_representatives().at(static_cast<std::size_t>(label - 1));
}

// phi(d) for a small loop d around each branch curve, in configuration
// order (L1', L2', L3', L1, L2, L3, E0, E1, E2, E3).
using LoopImages = std::array<FVec2, kNumCurves>;

inline LoopImages loop_images(const SixTuple& t, ZMod m = kZ5) {
  LoopImages out{};
  for (int s = 0; s < 6; ++s) out[s] = reduce(t.slots[s], m);
  out[6] = add(add(t.u(1), t.u(2), m), t.u(3), m);
  out[7] = add(add(t.u(1), t.v(2), m), t.v(3), m);
  out[8] = add(add(t.u(2), t.v(1), m), t.v(3), m);
  out[9] = add(add(t.u(3), t.v(1), m), t.v(2), m);
  return out;
}

enum class AdmissibilityFailure {
  kNone = 0,
  kSumNonzero = 1,      // condition 0: u1+u2+u3+v1+v2+v3 != 0
  kZeroLoopImage = 2,   // condition 1: some branch curve is not branched
  kDependentPair = 3,   // condition 2: images at an intersection point
                        // generate a cyclic subgroup (singular cover)
};

inline std::string_view to_string(AdmissibilityFailure f) {
  switch (f) {
    case AdmissibilityFailure::kNone: return "admissible";
    case AdmissibilityFailure::kSumNonzero: return "sum-nonzero";
    case AdmissibilityFailure::kZeroLoopImage: return "zero-loop-image";
    case AdmissibilityFailure::kDependentPair: return "dependent-pair";
  }
  return "unknown";
}

struct AdmissibilityResult {
  AdmissibilityFailure failure = AdmissibilityFailure::kNone;
  int condition = -1;                    // 0, 1 or 2 on failure
  int curve = -1;                        // condition 1: offending curve
  std::pair<int, int> pair{-1, -1};      // condition 2: offending incidence

  bool ok() const { return failure == AdmissibilityFailure::kNone; }
  explicit operator bool() const { return ok(); }

  std::string explain() const {
    const auto& cfg = configuration();
    switch (failure) {
      case AdmissibilityFailure::kNone:
        return "admissible";
      case AdmissibilityFailure::kSumNonzero:
        return "condition 0 fails: u1+u2+u3+v1+v2+v3 != 0";
      case AdmissibilityFailure::kZeroLoopImage:
        return "condition 1 fails: loop image of " + cfg.curve(curve).label +
               " is zero";
      case AdmissibilityFailure::kDependentPair:
        return "condition 2 fails: loop images of " +
               cfg.curve(pair.first).label + " and " +
               cfg.curve(pair.second).label + " are dependent";
    }
    return "unknown";
  }
};

inline AdmissibilityResult is_admissible(const SixTuple& t, ZMod m = kZ5) {
  AdmissibilityResult res;
  FVec2 sum{};
  for (const auto& s : t.slots) sum = add(sum, s, m);
  if (!sum.is_zero()) {
    res.failure = AdmissibilityFailure::kSumNonzero;
    res.condition = 0;
    return res;
  }
  const LoopImages img = loop_images(t, m);
  for (int i = 0; i < kNumCurves; ++i) {
    if (img[i].is_zero()) {
      res.failure = AdmissibilityFailure::kZeroLoopImage;
      res.condition = 1;
      res.curve = i;
      return res;
    }
  }
  for (const auto& [i, j] : configuration().incidences()) {
    if (!is_independent(img[i], img[j], m)) {
      res.failure = AdmissibilityFailure::kDependentPair;
      res.condition = 2;
      res.pair = {i, j};
      return res;
    }
  }
  return res;
}

// True iff the loop images generate (Z/n)^2.
inline bool is_totally_ramified(const SixTuple& t, ZMod m = kZ5) {
  const LoopImages img = loop_images(t, m);
  if (m.is_prime()) {
    for (int i = 0; i < kNumCurves; ++i)
      for (int j = i + 1; j < kNumCurves; ++j)
        if (is_independent(img[i], img[j], m)) return true;
    return false;
  }
  // Composite modulus: closure of the generated subgroup.
  std::vector<char> seen(static_cast<std::size_t>(m.n() * m.n()), 0);
  std::vector<FVec2> frontier{{0, 0}};
  seen[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const FVec2 v = frontier.back();
    frontier.pop_back();
    for (const FVec2& g : img) {
      const FVec2 w = add(v, g, m);
      auto& flag = seen[static_cast<std::size_t>(w.x * m.n() + w.y)];
      if (!flag) {
        flag = 1;
        ++count;
        frontier.push_back(w);
      }
    }
  }
  return count == seen.size();
}

inline int worker_count() {
  if (const char* env = std::getenv("QC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// All admissible six-tuples in lexicographic order of the twelve residues.
// Iterates (u1, u2, u3, v1, v2) over nonzero vectors and solves the sum
// condition for v3; work is split over u1 across `threads` workers.
inline std::vector<SixTuple> enumerate_admissible(ZMod m = kZ5, int threads = 0) {
  const std::vector<FVec2> nz = nonzero_vectors(m);
  if (threads <= 0) threads = worker_count();
  threads = std::min<int>(threads, static_cast<int>(nz.size()));

  std::vector<std::vector<SixTuple>> chunks(nz.size());
  auto work = [&](std::size_t first) {
    for (std::size_t a = first; a < nz.size(); a += static_cast<std::size_t>(threads)) {
      auto& out = chunks[a];
      SixTuple t;
      t.slots[0] = nz[a];
      for (const FVec2& u2 : nz) {
        t.slots[1] = u2;
        for (const FVec2& u3 : nz) {
          t.slots[2] = u3;
          // Prune on incidences already fixed by the prefix.
          const FVec2 e0 = add(add(nz[a], u2, m), u3, m);
          if (!is_independent(nz[a], e0, m) || !is_independent(u2, e0, m) ||
              !is_independent(u3, e0, m))
            continue;
          for (const FVec2& v1 : nz) {
            if (!is_independent(nz[a], v1, m)) continue;
            t.slots[3] = v1;
            for (const FVec2& v2 : nz) {
              if (!is_independent(u2, v2, m)) continue;
              t.slots[4] = v2;
              FVec2 partial{};
              for (int s = 0; s < 5; ++s) partial = add(partial, t.slots[s], m);
              t.slots[5] = sub(FVec2{}, partial, m);
              if (t.slots[5].is_zero()) continue;
              if (is_admissible(t, m)) out.push_back(t);
            }
          }
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
    for (auto& th : pool) th.join();
  }
  std::vector<SixTuple> result;
  for (auto& c : chunks) result.insert(result.end(), c.begin(), c.end());
  return result;
}

}  // namespace quadcover

#endif  // QUADCOVER_COVERS_HPP_
