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

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "p2strata/strata.hpp"

namespace p2strata {
namespace {

std::vector<ChernData> SmallGrid() {
  std::vector<ChernData> grid;
  for (Int r = 2; r <= 3; ++r) {
    for (Int c1 = -r + 1; c1 <= 0; ++c1) {
      for (Int c2 = 0; c2 <= 8; ++c2) {
        const ChernData c{r, c1, c2};
        if (ModuliDimension(c) < 0 || ModuliDimension(c) > 30) continue;
        try {
          SolveNaturalPair(c);
        } catch (const Error&) {
          continue;
        }
        grid.push_back(c);
      }
    }
  }
  return grid;
}

TEST(EnumerateStrata, TwoStratumExample) {
  const std::vector<StratumRecord> recs = EnumerateStrata({2, 0, 3}, {3, 3});
  const auto find = [&](const Pair& p) {
    return std::find_if(recs.begin(), recs.end(),
                        [&](const StratumRecord& r) { return r.pair == p; });
  };
  const auto natural = find(Pair::Make(2, {3}, {1, 1, 1}));
  ASSERT_NE(natural, recs.end());
  EXPECT_EQ(natural->codim, 0);
  EXPECT_TRUE(natural->is_natural);
  const auto other = find(Pair::Make(2, {2, 3}, {1, 1, 1, 2}));
  ASSERT_NE(other, recs.end());
  EXPECT_EQ(other->codim, 1);
  EXPECT_EQ(recs.front().pair, natural->pair);
}

TEST(EnumerateStrata, PointModuli) {
  const std::vector<StratumRecord> recs = EnumerateStrata({2, -1, 1}, {2, 2});
  const auto zero = std::count_if(recs.begin(), recs.end(),
                                  [](const auto& r) { return r.codim == 0; });
  EXPECT_EQ(zero, 1);
  EXPECT_EQ(recs.front().pair, Pair::Make(2, {2}, {1, 1, 1}));
}

TEST(EnumerateStrata, BoundsTooSmall) {
  try {
    EnumerateStrata({2, 0, 3}, {1, 1});
    FAIL() << "expected BoundsTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundsTooSmall);
  }
  try {
    EnumerateStrata({2, 0, 2}, {1, 5});
    FAIL() << "expected BoundsTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundsTooSmall);
  }
}

TEST(EnumerateStrata, ParallelMatchesSerialReference) {
  for (const ChernData& c : SmallGrid()) {
    const EnumerationBounds bounds = DefaultBounds(SolveNaturalPair(c));
    EXPECT_EQ(EnumerateStrata(c, bounds), EnumerateStrataSerial(c, bounds))
        << c.r << " " << c.c1 << " " << c.c2;
  }
}

TEST(EnumerateStrata, RecordsAgreeWithOracles) {
  for (const ChernData& c : SmallGrid()) {
    const EnumerationBounds bounds = DefaultBounds(SolveNaturalPair(c));
    const Int moduli =
        2 * c.r * c.c2 - (c.r - 1) * c.c1 * c.c1 - c.r * c.r + 1;
    for (const StratumRecord& rec : EnumerateStrata(c, bounds)) {
      const oracle::Chern pc = oracle::ChernBySeries(rec.pair);
      ASSERT_EQ(pc.c1, c.c1);
      ASSERT_EQ(pc.c2, c.c2);
      ASSERT_TRUE(StabilityNecessary(rec.pair, true));
      ASSERT_LE(rec.pair.k(), bounds.k_max);
      ASSERT_LE(Regularity(rec.pair), bounds.reg_max);
      ASSERT_EQ(rec.dim, oracle::StratumDimension(rec.pair));
      ASSERT_EQ(rec.codim, moduli - rec.dim);
    }
  }
}

TEST(EnumerateStrata, SortedAndDeterministic) {
  const ChernData c{3, -1, 4};
  const EnumerationBounds bounds = DefaultBounds(SolveNaturalPair(c));
  const std::vector<StratumRecord> first = EnumerateStrata(c, bounds);
  EXPECT_TRUE(std::is_sorted(first.begin(), first.end(), StratumOrder));
  for (int run = 0; run < 3; ++run) EXPECT_EQ(EnumerateStrata(c, bounds), first);
}

TEST(VerifyUniqueness, Examples) {
  EXPECT_EQ(VerifyUniqueness({2, 0, 3}, {3, 3}).records.size(), 2u);
  EXPECT_EQ(VerifyUniqueness({2, -1, 1}, {2, 2}).records.front().pair,
            Pair::Make(2, {2}, {1, 1, 1}));
  const UniquenessReport report = VerifyUniqueness({2, 0, 2}, {3, 3});
  EXPECT_EQ(report.records.front().pair, Pair::Make(2, {2, 2}, {1, 1, 1, 1}));
  EXPECT_EQ(report.records.front().codim, 0);
}

TEST(VerifyUniqueness, PassesOnSmallGrid) {
  for (const ChernData& c : SmallGrid()) {
    const UniquenessReport report = VerifyUniqueness(c);
    EXPECT_EQ(report.natural.pair, report.records.front().pair);
  }
}

}  // namespace
}  // namespace p2strata
