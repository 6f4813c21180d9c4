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

#include <cstddef>
#include <vector>

#include "enumerate_internal.hpp"
#include "p2strata/strata.hpp"

namespace p2strata {

namespace {

// Calls fn(seq) for every nondecreasing sequence of length n over [lo, hi],
// in lexicographic order.
template <typename Fn>
void ForEachNondecreasing(std::size_t n, Int lo, Int hi, Fn&& fn) {
  if (lo > hi) return;
  std::vector<Int> seq(n, lo);
  while (true) {
    fn(seq);
    std::size_t pos = n;
    while (pos > 0 && seq[pos - 1] == hi) --pos;
    if (pos == 0) return;
    const Int next = seq[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < n; ++i) seq[i] = next;
  }
}

Int Sum(const std::vector<Int>& xs) {
  Int s = 0;
  for (Int x : xs) s += x;
  return s;
}

Int SumSq(const std::vector<Int>& xs) {
  Int s = 0;
  for (Int x : xs) s += x * x;
  return s;
}

}  // namespace

std::vector<StratumRecord> EnumerateStrataSerial(
    const ChernData& c, const EnumerationBounds& bounds) {
  internal::CheckBounds(c, bounds);
  const Int lo = internal::MinFirstTwist(c);
  const Int disc = 2 * c.c2 - c.c1 * c.c1;

  std::vector<StratumRecord> records;
  for (Int k = 1; k <= bounds.k_max; ++k) {
    const auto n_b = static_cast<std::size_t>(c.r + k);
    ForEachNondecreasing(n_b, lo, bounds.reg_max, [&](const std::vector<Int>& b) {
      const Int b_sum = Sum(b);
      const Int b_sumsq = SumSq(b);
      // Any admissible a_i exceeds b_{r+i} >= lo.
      ForEachNondecreasing(
          static_cast<std::size_t>(k), lo + 1, bounds.reg_max + 1,
          [&](const std::vector<Int>& a) {
            if (Sum(a) - b_sum != c.c1 || SumSq(a) - b_sumsq != disc) return;
            const Pair p = Pair::Make(c.r, a, b);
            if (!IsStronglyAdmissible(p)) return;
            records.push_back(MakeStratumRecord(p));
          });
    });
  }
  internal::SortRecords(records);
  return records;
}

}  // namespace p2strata
