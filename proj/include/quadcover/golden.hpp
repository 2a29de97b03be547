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

// Published reference values for modulus 5, checked by `--verify`.
// Classes are (h, e0, e1, e2, e3); sheaf rows are b = 0..4, columns a = 0..4.

#ifndef QUADCOVER_GOLDEN_HPP_
#define QUADCOVER_GOLDEN_HPP_

#include <string_view>

namespace quadcover {

inline constexpr std::string_view kGoldenJson = R"json({
  "modulus": 5,
  "admissible_count": 201600,
  "orbit_sizes": [28800, 57600, 57600, 57600],
  "orbit_size_by_label": {"U1": 28800, "U2": 57600, "U3": 57600, "U4": 57600},
  "s5_order": 120,
  "group_order": 57600,
  "homology": {"rank": 5, "torsion": []},
  "representatives": {
    "U1": "1,0,1,0,0,1,2,1,2,1,4,2",
    "U2": "1,0,1,0,0,1,2,1,4,2,2,1",
    "U3": "1,0,1,0,0,1,4,1,3,2,1,1",
    "U4": "1,0,1,0,0,1,1,1,0,3,2,0"
  },
  "invariants": {
    "U1": {"q": 2},
    "U2": {"q": 2},
    "U3": {"k2": 45, "chi": 5, "pg": 4, "q": 0},
    "U4": {"q": 2}
  },
  "k2": 45,
  "chi": 5,
  "sheaf_table_U3": [
    [[0,0,0,0,0], [2,0,-1,-1,-1], [2,0,-1,-1,0], [3,-1,-2,-1,-1], [3,-1,-2,-1,0]],
    [[1,0,0,0,0], [1,0,0,0,0], [3,-1,-1,-1,-1], [3,-1,-1,-2,-1], [3,-1,-1,-1,-1]],
    [[2,0,-1,0,-1], [2,0,-1,-1,-1], [2,-1,-1,-1,0], [3,-1,-1,-1,-1], [3,-2,-1,-1,-1]],
    [[2,0,0,-1,-1], [3,-1,-1,-1,-1], [2,-1,0,0,-1], [2,-1,0,0,0], [4,-2,-1,-2,-2]],
    [[3,0,-1,-1,-2], [2,-1,0,0,-1], [3,-1,-1,-1,-2], [3,-2,-1,-1,-1], [3,-2,-1,-1,0]]
  ],
  "coefficients_U3": {
    "1,3": [1,1,3,2,4,4,0,4,2,4],
    "2,1": [2,2,1,4,3,3,0,3,4,3],
    "3,2": [3,3,2,4,3,0,3,1,2,4],
    "4,1": [4,4,1,2,4,0,4,3,1,2]
  },
  "ramification": {"selfint": -1, "kdot": 3, "genus": 2},
  "canonical_U3": {
    "basis": {
      "1,3": [3,3,1,2,0,0,4,0,2,0],
      "2,1": [2,2,3,0,1,1,4,1,0,1],
      "3,2": [1,1,2,0,1,4,1,3,2,0],
      "4,1": [0,0,3,2,0,4,0,1,3,2]
    },
    "fixed_part": [0,0,1,0,0,0,0,0,0,0],
    "base_points": [
      {"pair": [1,4], "type": [1,1]},
      {"pair": [1,8], "type": [1,1,1]},
      {"pair": [2,9], "type": [2,1,1]},
      {"pair": [3,7], "type": [2,1,1]},
      {"pair": [6,9], "type": [1,1]}
    ],
    "moving_selfint": 38,
    "type_square_sum": 19,
    "degree_product": 19,
    "birational": true
  }
})json";

}  // namespace quadcover

#endif  // QUADCOVER_GOLDEN_HPP_
