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

#include "p2strata/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace p2strata {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kEmptyA: return "EmptyA";
    case ErrorCode::kNonIntegralC2: return "NonIntegralC2";
    case ErrorCode::kWrongRank: return "WrongRank";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kNegativeH0: return "NegativeH0";
    case ErrorCode::kNoNaturalPair: return "NoNaturalPair";
    case ErrorCode::kBoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::kIndexModelViolation: return "IndexModelViolation";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kNotAdmissibleForMode: return "NotAdmissibleForMode";
    case ErrorCode::kDegenerateForms: return "DegenerateForms";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Rational Rational::Make(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Pair Pair::Make(Int r, std::vector<Int> a, std::vector<Int> b) {
  if (r < kAmbientDim) {
    throw Error(ErrorCode::kRankTooSmall,
                "rank " + std::to_string(r) + " < 2");
  }
  if (a.empty()) {
    throw Error(ErrorCode::kEmptyA,
                "k = 0 describes a split bundle, not a resolution");
  }
  if (static_cast<Int>(b.size()) != r + static_cast<Int>(a.size())) {
    throw Error(ErrorCode::kLengthMismatch,
                "len(b) = " + std::to_string(b.size()) + " but r + len(a) = " +
                    std::to_string(r + static_cast<Int>(a.size())));
  }
  if (!std::is_sorted(a.begin(), a.end())) {
    throw Error(ErrorCode::kNotSorted, "a is not nondecreasing");
  }
  if (!std::is_sorted(b.begin(), b.end())) {
    throw Error(ErrorCode::kNotSorted, "b is not nondecreasing");
  }
  return Pair(r, std::move(a), std::move(b));
}

Pair Pair::Twist(Int t) const {
  std::vector<Int> a = a_;
  std::vector<Int> b = b_;
  for (Int& x : a) x -= t;
  for (Int& x : b) x -= t;
  return Pair(r_, std::move(a), std::move(b));
}

namespace {

// a_i > b_{offset+i} for every i.
bool ShiftedDominance(const Pair& p, Int offset) {
  for (Int i = 1; i <= p.k(); ++i) {
    if (p.a_at(i) <= p.b_at(offset + i)) return false;
  }
  return true;
}

Int SumOfSquares(std::span<const Int> xs) {
  Int s = 0;
  for (Int x : xs) s += x * x;
  return s;
}

}  // namespace

bool IsStronglyAdmissible(const Pair& p) { return ShiftedDominance(p, p.r()); }

bool IsWeaklyAdmissible(const Pair& p) {
  return ShiftedDominance(p, kAmbientDim);
}

Admissibility ClassifyAdmissibility(const Pair& p) {
  if (IsStronglyAdmissible(p)) return Admissibility::kStronglyAdmissible;
  if (IsWeaklyAdmissible(p)) return Admissibility::kWeaklyAdmissibleOnly;
  return Admissibility::kNotWeaklyAdmissible;
}

ChernData ChernClasses(const Pair& p) {
  const Int c1 = std::accumulate(p.a().begin(), p.a().end(), Int{0}) -
                 std::accumulate(p.b().begin(), p.b().end(), Int{0});
  const Int twice_c2 = c1 * c1 + SumOfSquares(p.a()) - SumOfSquares(p.b());
  // x^2 = x (mod 2), so this is even for any integer pair.
  if (twice_c2 % 2 != 0) {
    throw Error(ErrorCode::kNonIntegralC2,
                "2 c2 = " + std::to_string(twice_c2) + " is odd");
  }
  return ChernData{p.r(), c1, twice_c2 / 2};
}

Rational Slope(const ChernData& c) { return Rational::Make(c.c1, c.r); }

Int Regularity(const Pair& p) {
  return std::max(p.a().back() - 1, p.b().back());
}

bool StabilityNecessary(const Pair& p, bool strict) {
  if (!IsStronglyAdmissible(p)) return false;
  const Int lhs = p.r() * p.b().front() + ChernClasses(p).c1;
  return strict ? lhs > 0 : lhs >= 0;
}

Rank2Stability StabilityRank2(const Pair& p) {
  if (p.r() != 2) {
    throw Error(ErrorCode::kWrongRank,
                "rank-2 criterion applied to rank " + std::to_string(p.r()));
  }
  if (!IsStronglyAdmissible(p)) {
    throw Error(ErrorCode::kNotAdmissible, "pair is not admissible");
  }
  const Int lhs = 2 * p.b().front() + ChernClasses(p).c1;
  if (lhs > 0) return Rank2Stability::kStable;
  if (lhs == 0) return Rank2Stability::kStrictlySemistable;
  return Rank2Stability::kUnstable;
}

}  // namespace p2strata
