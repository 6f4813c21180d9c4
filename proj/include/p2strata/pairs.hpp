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

// Betti data of a length-one resolution
//
//   0 -> (+)_i O(-a_i) -> (+)_j O(-b_j) -> E -> 0
//
// of a rank r bundle on P^2, together with the purely arithmetic invariants
// that can be read off from it: admissibility, Chern classes, slope,
// regularity and the numerical stability conditions.

#ifndef P2STRATA_PAIRS_HPP_
#define P2STRATA_PAIRS_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "p2strata/error.hpp"

namespace p2strata {

using Int = std::int64_t;

// Dimension of the ambient projective space. Everything here is P^2.
inline constexpr Int kAmbientDim = 2;

struct ChernData {
  Int r = 2;
  Int c1 = 0;
  Int c2 = 0;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

// Exact rational in lowest terms with positive denominator.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational Make(Int num, Int den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Admissibility {
  kNotWeaklyAdmissible,
  kWeaklyAdmissibleOnly,
  kStronglyAdmissible,
};

enum class Rank2Stability {
  kStable,
  kStrictlySemistable,
  kUnstable,
};

// Nondecreasing a (length k >= 1) and b (length r + k), r >= 2. Instances are
// only created through Make(), which rejects malformed input instead of
// reordering it.
class Pair {
 public:
  static Pair Make(Int r, std::vector<Int> a, std::vector<Int> b);

  Int r() const { return r_; }
  Int k() const { return static_cast<Int>(a_.size()); }
  std::span<const Int> a() const { return a_; }
  std::span<const Int> b() const { return b_; }

  // 1-based accessors matching the usual indexing a_1..a_k, b_1..b_{r+k}.
  Int a_at(Int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
  Int b_at(Int j) const { return b_[static_cast<std::size_t>(j - 1)]; }

  // Pair of E(t): every twist shifted down by t.
  Pair Twist(Int t) const;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;

 private:
  Pair(Int r, std::vector<Int> a, std::vector<Int> b)
      : r_(r), a_(std::move(a)), b_(std::move(b)) {}

  Int r_;
  std::vector<Int> a_;
  std::vector<Int> b_;
};

Admissibility ClassifyAdmissibility(const Pair& p);
bool IsStronglyAdmissible(const Pair& p);
bool IsWeaklyAdmissible(const Pair& p);

// c1 = sum a - sum b, 2 c2 - c1^2 = sum a^2 - sum b^2.
// Throws kNonIntegralC2 when the right-hand side has the wrong parity.
ChernData ChernClasses(const Pair& p);

Rational Slope(const ChernData& c);

// max(a_k - 1, b_{r+k}).
Int Regularity(const Pair& p);

// Necessary condition for (semi)stability when r >= 2: strong admissibility
// and b_1 > -mu (strict) or b_1 >= -mu (non-strict), compared as r b_1 + c1.
bool StabilityNecessary(const Pair& p, bool strict);

// Full characterization for rank two. Requires an admissible pair.
Rank2Stability StabilityRank2(const Pair& p);

}  // namespace p2strata

#endif  // P2STRATA_PAIRS_HPP_
