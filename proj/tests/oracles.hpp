// Copyright 2026 The p2strata Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent brute-force routes used to produce and check expected values.
// Nothing here calls into the library's formulas.

#ifndef P2STRATA_TESTS_ORACLES_HPP_
#define P2STRATA_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "p2strata/pairs.hpp"

namespace p2strata::oracle {

// Number of monomials x0^i x1^j x2^l with i + j + l = d.
inline Int CountMonomials(Int d) {
  Int n = 0;
  for (Int i = 0; i <= d; ++i) {
    for (Int j = 0; i + j <= d; ++j) ++n;
  }
  return n;
}

// h^2(O(t)) = number of Cech 2-cocycle monomials x0^i x1^j x2^l with all
// exponents <= -1 and i + j + l = t.
inline Int CountNegativeMonomials(Int t) {
  Int n = 0;
  for (Int i = -1; i >= t; --i) {
    for (Int j = -1; i + j >= t; --j) {
      if (t - i - j <= -1) ++n;
    }
  }
  return n;
}

// chi(O(d)) by Lagrange interpolation through d = 0, 1, 2, where it equals
// the monomial count; valid for every d since chi is quadratic in d.
inline Int ChiLine(Int d) {
  const Int y0 = CountMonomials(0);
  const Int y1 = CountMonomials(1);
  const Int y2 = CountMonomials(2);
  // Newton form: y0 + d*(y1-y0) + d(d-1)/2 * (y2 - 2 y1 + y0).
  return y0 + d * (y1 - y0) + d * (d - 1) / 2 * (y2 - 2 * y1 + y0);
}

inline Int EulerChar(const Pair& p, Int t) {
  Int chi = 0;
  for (Int b : p.b()) chi += ChiLine(t - b);
  for (Int a : p.a()) chi -= ChiLine(t - a);
  return chi;
}

// c(E) = prod_j (1 - b_j h) * prod_i (1 - a_i h)^{-1} mod h^3.
struct Chern {
  Int c1;
  Int c2;
};

inline Chern ChernBySeries(const Pair& p) {
  Int s1 = 0;
  Int s2 = 0;
  const auto times = [&](Int x1, Int x2) {
    const Int n2 = s2 + s1 * x1 + x2;
    const Int n1 = s1 + x1;
    s1 = n1;
    s2 = n2;
  };
  for (Int b : p.b()) times(-b, 0);
  for (Int a : p.a()) times(a, a * a);  // 1 / (1 - a h) = 1 + a h + a^2 h^2
  return Chern{s1, s2};
}

// Hom(O(-x), O(-y)) = degree x - y forms.
inline Int StratumDimension(const Pair& p) {
  const auto hom = [](auto from, auto to) {
    Int n = 0;
    for (Int x : from) {
      for (Int y : to) n += x - y >= 0 ? CountMonomials(x - y) : 0;
    }
    return n;
  };
  Int coincide = 0;
  for (Int a : p.a()) {
    for (Int b : p.b()) coincide += a == b;
  }
  return hom(p.a(), p.b()) + hom(p.b(), p.a()) - hom(p.a(), p.a()) -
         hom(p.b(), p.b()) + 1 - coincide;
}

// Determinant over Z/p by Leibniz expansion; n! terms, small n only.
inline std::uint64_t LeibnizDet(const std::vector<std::vector<std::uint64_t>>& m,
                                std::uint64_t p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]] % p;
    det = inversions % 2 ? (det + p - term) % p : (det + term) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Largest r such that some r x r minor of the row-major matrix is nonzero.
inline Int RankByMinors(const std::vector<std::uint64_t>& values, Int rows,
                        Int cols, std::uint64_t p) {
  for (Int size = std::min(rows, cols); size > 0; --size) {
    std::vector<bool> pick_rows(static_cast<std::size_t>(rows), false);
    std::fill(pick_rows.begin(), pick_rows.begin() + size, true);
    do {
      std::vector<bool> pick_cols(static_cast<std::size_t>(cols), false);
      std::fill(pick_cols.begin(), pick_cols.begin() + size, true);
      do {
        std::vector<std::vector<std::uint64_t>> minor;
        for (Int i = 0; i < rows; ++i) {
          if (!pick_rows[static_cast<std::size_t>(i)]) continue;
          std::vector<std::uint64_t> row;
          for (Int j = 0; j < cols; ++j) {
            if (pick_cols[static_cast<std::size_t>(j)]) {
              row.push_back(values[static_cast<std::size_t>(i * cols + j)]);
            }
          }
          minor.push_back(std::move(row));
        }
        if (LeibnizDet(minor, p) != 0) return size;
      } while (std::prev_permutation(pick_cols.begin(), pick_cols.end()));
    } while (std::prev_permutation(pick_rows.begin(), pick_rows.end()));
  }
  return 0;
}

// Random valid pair: nondecreasing sequences with entries in [lo, hi].
inline Pair RandomPair(std::mt19937_64& rng, Int r, Int k, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  std::vector<Int> a(static_cast<std::size_t>(k));
  std::vector<Int> b(static_cast<std::size_t>(r + k));
  for (Int& x : a) x = dist(rng);
  for (Int& x : b) x = dist(rng);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return Pair::Make(r, std::move(a), std::move(b));
}

}  // namespace p2strata::oracle

#endif  // P2STRATA_TESTS_ORACLES_HPP_
