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

// Shared between the OpenMP enumeration kernel and its serial reference.

#ifndef P2STRATA_SRC_ENUMERATE_INTERNAL_HPP_
#define P2STRATA_SRC_ENUMERATE_INTERNAL_HPP_

#include <vector>

#include "p2strata/strata.hpp"

namespace p2strata::internal {

constexpr Int FloorDiv(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

constexpr Int CeilDiv(Int num, Int den) { return -FloorDiv(-num, den); }

// Smallest b_1 with r b_1 + c1 >= 1.
constexpr Int MinFirstTwist(const ChernData& c) {
  return CeilDiv(1 - c.c1, c.r);
}

// Rejects k_max < 1 and boxes that miss the natural pair of c. Chern data
// without a natural pair is enumerated as given.
void CheckBounds(const ChernData& c, const EnumerationBounds& bounds);

void SortRecords(std::vector<StratumRecord>& records);

}  // namespace p2strata::internal

#endif  // P2STRATA_SRC_ENUMERATE_INTERNAL_HPP_
