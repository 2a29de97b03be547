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

// Residue arithmetic over Z/nZ: 2-vectors (loop images and characters),
// 2x2 matrices, and the 12x12 matrices acting on stacked six-tuples.
//
// Residues are always stored in the fixed representative system
// {0, ..., n-1}.

#ifndef QUADCOVER_GF5CORE_HPP_
#define QUADCOVER_GF5CORE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quadcover {

// Largest modulus whose residues fit the byte-packed 12x12 matrices.
inline constexpr int kMaxModulus = 251;

class ZMod {
 public:
  constexpr ZMod() = default;
  constexpr explicit ZMod(int n) : n_(n) {
    if (n < 2 || n > kMaxModulus) {
      throw std::invalid_argument("modulus must lie in [2, 251], got " +
                                  std::to_string(n));
    }
  }

  constexpr int n() const noexcept { return n_; }

  constexpr int reduce(long long v) const noexcept {
    long long r = v % n_;
    return static_cast<int>(r < 0 ? r + n_ : r);
  }
  constexpr int add(int a, int b) const noexcept { return reduce(a + b); }
  constexpr int sub(int a, int b) const noexcept { return reduce(a - b); }
  constexpr int mul(int a, int b) const noexcept {
    return reduce(static_cast<long long>(a) * b);
  }
  constexpr int neg(int a) const noexcept { return reduce(-a); }

  constexpr bool is_unit(int a) const noexcept {
    return std::gcd(reduce(a), n_) == 1;
  }

  int inverse(int a) const {
    const int r = reduce(a);
    for (int b = 1; b < n_; ++b) {
      if (mul(r, b) == 1) return b;
    }
    throw std::domain_error(std::to_string(a) + " is not invertible mod " +
                            std::to_string(n_));
  }

  constexpr bool is_prime() const noexcept {
    for (int d = 2; d * d <= n_; ++d) {
      if (n_ % d == 0) return false;
    }
    return true;
  }

  // Smallest generator of the multiplicative group; n must be prime.
  int primitive_root() const {
    if (!is_prime()) throw std::domain_error("primitive root needs a prime");
    for (int g = 1; g < n_; ++g) {
      int x = 1;
      int order = 0;
      do {
        x = mul(x, g);
        ++order;
      } while (x != 1);
      if (order == n_ - 1) return g;
    }
    return 1;  // n == 2
  }

  friend constexpr bool operator==(ZMod, ZMod) = default;

 private:
  int n_ = 5;
};

inline constexpr ZMod kZ5{};

// An element of (Z/n)^2. Used both for loop images and for characters
// (a, b), which pair with vectors through chi_eval.
struct FVec2 {
  int x = 0;
  int y = 0;

  constexpr bool is_zero() const noexcept { return x == 0 && y == 0; }
  friend constexpr auto operator<=>(const FVec2&, const FVec2&) = default;
};

constexpr FVec2 add(FVec2 a, FVec2 b, ZMod m = kZ5) noexcept {
  return {m.add(a.x, b.x), m.add(a.y, b.y)};
}
constexpr FVec2 sub(FVec2 a, FVec2 b, ZMod m = kZ5) noexcept {
  return {m.sub(a.x, b.x), m.sub(a.y, b.y)};
}
constexpr FVec2 scale(int s, FVec2 a, ZMod m = kZ5) noexcept {
  return {m.mul(s, a.x), m.mul(s, a.y)};
}
constexpr FVec2 reduce(FVec2 a, ZMod m = kZ5) noexcept {
  return {m.reduce(a.x), m.reduce(a.y)};
}

// [a*x + b*y] for chi = (a, b), v = (x, y).
constexpr int chi_eval(FVec2 chi, FVec2 v, ZMod m = kZ5) noexcept {
  return m.reduce(static_cast<long long>(chi.x) * v.x +
                  static_cast<long long>(chi.y) * v.y);
}

constexpr int det2(FVec2 v, FVec2 w, ZMod m = kZ5) noexcept {
  return m.reduce(static_cast<long long>(v.x) * w.y -
                  static_cast<long long>(v.y) * w.x);
}

// True iff {v, w} is a basis of (Z/n)^2.
constexpr bool is_independent(FVec2 v, FVec2 w, ZMod m = kZ5) noexcept {
  return m.is_unit(det2(v, w, m));
}

// All n^2 vectors (or characters) in lexicographic order of (x, y).
inline std::vector<FVec2> all_vectors(ZMod m = kZ5) {
  std::vector<FVec2> out;
  out.reserve(static_cast<std::size_t>(m.n() * m.n()));
  for (int x = 0; x < m.n(); ++x) {
    for (int y = 0; y < m.n(); ++y) out.push_back({x, y});
  }
  return out;
}

inline std::vector<FVec2> nonzero_vectors(ZMod m = kZ5) {
  auto all = all_vectors(m);
  all.erase(all.begin());
  return all;
}

// Row-major 2x2 matrix acting on column vectors.
struct FMat2 {
  std::array<int, 4> a{1, 0, 0, 1};

  constexpr int operator()(int r, int c) const noexcept { return a[2 * r + c]; }
  constexpr int det(ZMod m = kZ5) const noexcept {
    return m.reduce(static_cast<long long>(a[0]) * a[3] -
                    static_cast<long long>(a[1]) * a[2]);
  }
  constexpr bool is_invertible(ZMod m = kZ5) const noexcept {
    return m.is_unit(det(m));
  }
  constexpr FVec2 apply(FVec2 v, ZMod m = kZ5) const noexcept {
    return {m.reduce(static_cast<long long>(a[0]) * v.x +
                     static_cast<long long>(a[1]) * v.y),
            m.reduce(static_cast<long long>(a[2]) * v.x +
                     static_cast<long long>(a[3]) * v.y)};
  }

  static constexpr FMat2 identity() noexcept { return {}; }
  friend constexpr auto operator<=>(const FMat2&, const FMat2&) = default;
};

// Every element of GL(2, Z/n), each exactly once, in lexicographic order of
// the four entries.
inline std::vector<FMat2> gl2_enumerate(ZMod m = kZ5) {
  if (!m.is_prime()) {
    throw std::domain_error("gl2_enumerate requires a prime modulus, got " +
                            std::to_string(m.n()));
  }
  std::vector<FMat2> out;
  const int n = m.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          FMat2 g{{a, b, c, d}};
          if (g.is_invertible(m)) out.push_back(g);
        }
  return out;
}

// Stacked six-tuple (u1, u2, u3, v1, v2, v3) as twelve residues.
using Vec12 = std::array<int, 12>;

// 12x12 matrix over Z/n with byte-packed entries; acts on Vec12.
class FMat12 {
 public:
  static constexpr int kDim = 12;

  explicit FMat12(ZMod m = kZ5) : mod_(m) { entries_.fill(0); }

  static FMat12 identity(ZMod m = kZ5) {
    FMat12 out(m);
    for (int i = 0; i < kDim; ++i) out.set(i, i, 1);
    return out;
  }

  // Block matrix with the 6x6 slot-coefficient matrix `slots` tensored with
  // the 2x2 matrix `block`: output slot i is sum_j slots[i][j] * block * in_j.
  static FMat12 kron(const std::array<std::array<int, 6>, 6>& slots,
                     const FMat2& block, ZMod m = kZ5) {
    FMat12 out(m);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            out.set(2 * i + r, 2 * j + c,
                    m.mul(slots[i][j], block(r, c)));
    return out;
  }

  ZMod modulus() const noexcept { return mod_; }
  int operator()(int r, int c) const noexcept { return entries_[idx(r, c)]; }
  void set(int r, int c, int v) {
    entries_[idx(r, c)] = static_cast<std::uint8_t>(mod_.reduce(v));
  }

  Vec12 apply(const Vec12& v) const noexcept {
    Vec12 out{};
    for (int r = 0; r < kDim; ++r) {
      int acc = 0;
      for (int c = 0; c < kDim; ++c) acc += entries_[idx(r, c)] * v[c];
      out[r] = mod_.reduce(acc);
    }
    return out;
  }

  friend FMat12 operator*(const FMat12& a, const FMat12& b) {
    FMat12 out(a.mod_);
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c) {
        int acc = 0;
        for (int k = 0; k < kDim; ++k)
          acc += a.entries_[idx(r, k)] * b.entries_[idx(k, c)];
        out.entries_[idx(r, c)] = static_cast<std::uint8_t>(a.mod_.reduce(acc));
      }
    return out;
  }

  // Rank over Z/n by Gaussian elimination; n must be prime.
  int rank() const {
    std::array<std::array<int, kDim>, kDim> w{};
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c) w[r][c] = (*this)(r, c);
    int rk = 0;
    for (int c = 0; c < kDim && rk < kDim; ++c) {
      int piv = -1;
      for (int r = rk; r < kDim; ++r)
        if (w[r][c] != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(w[piv], w[rk]);
      const int inv = mod_.inverse(w[rk][c]);
      for (int r = 0; r < kDim; ++r) {
        if (r == rk || w[r][c] == 0) continue;
        const int f = mod_.mul(w[r][c], inv);
        for (int k = 0; k < kDim; ++k)
          w[r][k] = mod_.sub(w[r][k], mod_.mul(f, w[rk][k]));
      }
      ++rk;
    }
    return rk;
  }
  bool is_invertible() const { return rank() == kDim; }

  std::string_view bytes() const noexcept {
    return {reinterpret_cast<const char*>(entries_.data()), entries_.size()};
  }

  friend bool operator==(const FMat12& a, const FMat12& b) noexcept {
    return a.mod_ == b.mod_ && a.entries_ == b.entries_;
  }

 private:
  static constexpr int idx(int r, int c) noexcept { return r * kDim + c; }

  ZMod mod_;
  std::array<std::uint8_t, kDim * kDim> entries_{};
};

struct FMat12Hash {
  std::size_t operator()(const FMat12& m) const noexcept {
    return std::hash<std::string_view>{}(m.bytes());
  }
};

}  // namespace quadcover

#endif  // QUADCOVER_GF5CORE_HPP_
