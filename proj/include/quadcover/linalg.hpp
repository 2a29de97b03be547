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

// Exact linear algebra: rank over Q and Smith normal form over Z.

#ifndef QUADCOVER_LINALG_HPP_
#define QUADCOVER_LINALG_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadcover {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <typename T>
using Matrix = std::vector<std::vector<T>>;

using IntMatrix = Matrix<long long>;

// Rank of a rational matrix by fraction-exact Gaussian elimination. The
// argument is taken by value and used as workspace.
inline int rational_rank(Matrix<Rational> w) {
  const std::size_t rows = w.size();
  if (rows == 0) return 0;
  const std::size_t cols = w.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && w[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(w[piv], w[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (w[r][c] == 0) continue;
      const Rational f = w[r][c] / w[rank][c];
      for (std::size_t k = c; k < cols; ++k) w[r][k] -= f * w[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline Matrix<Rational> to_rational(const IntMatrix& a) {
  Matrix<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i].assign(a[i].begin(), a[i].end());
  return out;
}

inline IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a.front().size(), std::vector<long long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b.front().size() : 0;
  IntMatrix out(a.size(), std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  std::vector<long long> invariant_factors;  // nonzero diagonal entries

  int rank() const { return static_cast<int>(invariant_factors.size()); }
};

namespace detail {

inline void row_op(IntMatrix& m, std::size_t dst, std::size_t src, long long f) {
  for (std::size_t k = 0; k < m[dst].size(); ++k) m[dst][k] -= f * m[src][k];
}

inline void col_op(IntMatrix& m, std::size_t dst, std::size_t src, long long f) {
  for (auto& row : m) row[dst] -= f * row[src];
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace detail

// Smith normal form over the integers. Entries are expected to stay small
// (the matrices here are incidence tables); no modular shortcuts are taken.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  SmithForm s{identity_matrix(rows), identity_matrix(cols), a, {}};
  IntMatrix& d = s.d;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 &&
            (!found || std::llabs(d[i][j]) < std::llabs(d[pr][pc]))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found) break;
    std::swap(d[t], d[pr]);
    std::swap(s.u[t], s.u[pr]);
    detail::swap_cols(d, t, pc);
    detail::swap_cols(s.v, t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        const long long q = d[i][t] / d[t][t];
        detail::row_op(d, i, t, q);
        detail::row_op(s.u, i, t, q);
        if (d[i][t] != 0) {
          std::swap(d[t], d[i]);
          std::swap(s.u[t], s.u[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        const long long q = d[t][j] / d[t][t];
        detail::col_op(d, j, t, q);
        detail::col_op(s.v, j, t, q);
        if (d[t][j] != 0) {
          detail::swap_cols(d, t, j);
          detail::swap_cols(s.v, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: fold any trailing entry not divisible by the pivot
      // into row t and repeat.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            detail::row_op(d, t, i, -1);
            detail::row_op(s.u, t, i, -1);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    s.invariant_factors.push_back(d[t][t]);
  }
  return s;
}

}  // namespace quadcover

#endif  // QUADCOVER_LINALG_HPP_
