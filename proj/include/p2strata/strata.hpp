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

// Stratification of M(r, c1, c2) by Betti data.
//
// Every number reported here is a closed-form function of the pair:
//
//   dim M(r, c1, c2)  = 2 r c2 - (r - 1) c1^2 - r^2 + 1
//   dim M(a, b)       = hom(F1, F0) + hom(F0, F1) - end(F1) - end(F0) + 1
//                       - #{(i, j) : a_i = b_j}
//   codim             = dim M(r, c1, c2) - dim M(a, b)
//
// The codimension is bounded below by #{a_i = b_j} plus a sum of second
// differences of A(t) = h^2(O(t)); both terms are nonnegative and are
// reported next to the codimension as a cross-check.
//
// The unique codimension-0 stratum belongs to the natural pair
// (b_{r+k} < a_1, a_k <= b_1 + 2), parametrized by (s, k, alpha).

#ifndef P2STRATA_STRATA_HPP_
#define P2STRATA_STRATA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p2strata/pairs.hpp"

namespace p2strata {

struct NaturalPairParams {
  Int s = 0;
  Int k = 1;
  Int alpha = 0;

  friend bool operator==(const NaturalPairParams&,
                         const NaturalPairParams&) = default;
};

struct NaturalPair {
  NaturalPairParams params;
  Pair pair;
};

struct StratumRecord {
  Pair pair;
  ChernData chern;
  Int dim = 0;
  Int codim = 0;
  Int coincidences = 0;
  Int dd_sum = 0;
  bool is_natural = false;

  friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

struct CodimBound {
  Int coincidences = 0;
  Int dd_sum = 0;
};

struct EnumerationBounds {
  Int k_max = 1;
  Int reg_max = 0;
};

Int ModuliDimension(const ChernData& c);
Int StratumDimension(const Pair& p);
Int StratumCodimension(const Pair& p);

// #{(i, j) : a_i = b_j} and
//   sum_{i,j=1..k} A(b_{r+i} - a_j) - A(b_{r+i} - b_{r+j})
//                  - A(a_i - a_j) + A(a_i - b_{r+j}).
// Requires a strongly admissible pair; throws kNotAdmissible otherwise and
// kIndexModelViolation if the double-difference sum comes out negative.
CodimBound CodimLowerBound(const Pair& p);

bool IsNatural(const Pair& p);

// [r s^2 + 2 c1 s - c1 - r s + 1, r s^2 + 2 c1 s + c1 + r s]: the values of
// 2 c2 - c1^2 for which s is the regularity of the natural pair.
std::pair<Int, Int> RegularityInterval(Int r, Int c1, Int s);

// s = max{rho : r rho^2 + 2 c1 rho - r rho <= 2 c2 - c1^2 + c1 - 1}.
// nullopt when the set is empty.
std::optional<Int> RegularityByUpperSet(const ChernData& c);

// s = min{rho : r rho^2 + 2 c1 rho + r rho >= 2 c2 - c1^2 - c1}, with rho
// restricted to the increasing branch of the left-hand side (the set is not
// bounded below otherwise). Independent route used to cross-check the above.
Int RegularityByLowerSet(const ChernData& c);

// Pair (a, b)_{s,k,alpha} of rank r. Throws kNoNaturalPair when k < 1 or
// alpha lies outside [-k + 1, k + r].
Pair ExpandNaturalPair(Int r, const NaturalPairParams& params);

// The unique candidate for the codimension-0 stratum of M(r, c1, c2).
// Throws kNoNaturalPair whenever the data cannot come from a nonempty moduli
// space: no admissible s, k non-integral or out of range, negative expected
// dimension, or a natural pair failing r b_1 + c1 > 0.
NaturalPair SolveNaturalPair(const ChernData& c);

// First twist with h^0(E(t)) != 0 for the general E: s when alpha = k + r,
// s - 1 otherwise. Both the parametric and the arithmetic form of the
// condition are evaluated and must agree.
Int H0Threshold(const ChernData& c);

StratumRecord MakeStratumRecord(const Pair& p);

// (codim, k, a, b) ascending.
bool StratumOrder(const StratumRecord& lhs, const StratumRecord& rhs);

// k_max = k_nat + 3, reg_max = s_nat + 2.
EnumerationBounds DefaultBounds(const NaturalPair& natural);

// All strongly admissible pairs with Chern data c, 1 <= k <= k_max,
// r b_1 + c1 >= 1, b_{r+k} <= reg_max and a_k <= reg_max + 1, as records in
// StratumOrder. OpenMP-parallel over (k, b_1) prefixes with sum pruning.
// Throws kBoundsTooSmall if the natural pair of c exists but falls outside
// the box.
std::vector<StratumRecord> EnumerateStrata(const ChernData& c,
                                           const EnumerationBounds& bounds);

// Same contract, exhaustive single-threaded scan with no pruning. Kept as the
// reference for EnumerateStrata; exponential in k_max.
std::vector<StratumRecord> EnumerateStrataSerial(
    const ChernData& c, const EnumerationBounds& bounds);

struct UniquenessReport {
  ChernData chern;
  NaturalPair natural;
  EnumerationBounds bounds;
  std::vector<StratumRecord> records;
  // Records where codim - coincidences - dd_sum differs from the generic
  // sum of h^1(E(b_i)), i = 1..r. Informational only.
  std::size_t h1_model_mismatches = 0;
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(const std::string& message,
                     std::vector<StratumRecord> offending)
      : Error(ErrorCode::kVerificationFailed, message),
        offending_(std::move(offending)) {}

  const std::vector<StratumRecord>& offending() const { return offending_; }

 private:
  std::vector<StratumRecord> offending_;
};

// Enumerates the box and checks: exactly one record of codim 0, equal to the
// natural pair; codim >= coincidences + dd_sum everywhere; no negative codim.
// Throws VerificationFailed with the offending records otherwise.
UniquenessReport VerifyUniqueness(const ChernData& c,
                                  const EnumerationBounds& bounds);
UniquenessReport VerifyUniqueness(const ChernData& c);

}  // namespace p2strata

#endif  // P2STRATA_STRATA_HPP_
