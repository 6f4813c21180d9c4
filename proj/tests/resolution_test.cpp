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

#include "p2strata/resolution.hpp"

#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace p2strata {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

const PrimeField kField;

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_EQ(CodeOf([] { PrimeField f(65536); }), ErrorCode::kBadModulus);
  EXPECT_EQ(CodeOf([] { PrimeField f(1); }), ErrorCode::kBadModulus);
  EXPECT_EQ(CodeOf([] { PrimeField f(4294967311ULL); }),
            ErrorCode::kBadModulus);
  EXPECT_NO_THROW(PrimeField f(4294967291ULL));
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f(101);
  EXPECT_EQ(f.Reduce(-1), 100u);
  EXPECT_EQ(f.Pow(3, 100), 1u);
  for (Residue x = 1; x < 101; ++x) EXPECT_EQ(f.Mul(x, f.Inverse(x)), 1u);
}

TEST(BuildBanded, SingleColumn) {
  const Pair p = Pair::Make(2, {3}, {1, 1, 1});
  const BandedMatrix m =
      BuildBanded(p, FormSystem::Vandermonde(2, kField), BandMode::kStrong);
  ASSERT_EQ(m.rows(), 3);
  ASSERT_EQ(m.cols(), 1);
  const std::vector<BandEntry> expected{
      {1, 1, 0, 2}, {2, 1, 1, 2}, {3, 1, 2, 2}};
  EXPECT_EQ(std::vector<BandEntry>(m.entries().begin(), m.entries().end()),
            expected);
}

TEST(BuildBanded, TwoColumns) {
  const Pair p = Pair::Make(2, {2, 2}, {1, 1, 1, 1});
  const BandedMatrix m =
      BuildBanded(p, FormSystem::Vandermonde(2, kField), BandMode::kStrong);
  const std::vector<BandEntry> expected{{1, 1, 0, 1}, {2, 1, 1, 1},
                                        {2, 2, 0, 1}, {3, 1, 2, 1},
                                        {3, 2, 1, 1}, {4, 2, 2, 1}};
  EXPECT_EQ(std::vector<BandEntry>(m.entries().begin(), m.entries().end()),
            expected);
}

TEST(BuildBanded, Rejections) {
  const FormSystem forms = FormSystem::Vandermonde(2, kField);
  EXPECT_EQ(CodeOf([&] {
              BuildBanded(Pair::Make(2, {1}, {1, 1, 1}), forms,
                          BandMode::kStrong);
            }),
            ErrorCode::kNotAdmissibleForMode);
  EXPECT_EQ(CodeOf([&] {
              BuildBanded(Pair::Make(3, {2}, {1, 1, 1, 2}),
                          FormSystem::Vandermonde(3, kField),
                          BandMode::kStrong);
            }),
            ErrorCode::kNotAdmissibleForMode);
  // Two proportional forms break general position.
  const FormSystem bad =
      FormSystem::FromForms(kField, {{1, 0, 0}, {2, 0, 0}, {0, 0, 1}});
  EXPECT_FALSE(bad.InGeneralPosition());
  EXPECT_EQ(CodeOf([&] {
              BuildBanded(Pair::Make(2, {3}, {1, 1, 1}), bad,
                          BandMode::kStrong);
            }),
            ErrorCode::kDegenerateForms);
}

TEST(FormSystem, GeneralIsDeterministicAndGeneric) {
  for (Int r = 2; r <= 6; ++r) {
    const FormSystem f = FormSystem::General(r, kField, 42);
    EXPECT_TRUE(f.InGeneralPosition());
    const FormSystem g = FormSystem::General(r, kField, 42);
    EXPECT_TRUE(std::ranges::equal(f.forms(), g.forms()));
  }
  EXPECT_TRUE(FormSystem::Coordinate(4, kField).IsCoordinateSystem());
  EXPECT_TRUE(FormSystem::Coordinate(4, kField).IsZeroForm(3));
}

TEST(CheckMinimality, Examples) {
  const BandedMatrix m =
      BuildBanded(Pair::Make(2, {3}, {1, 1, 1}),
                  FormSystem::Vandermonde(2, kField), BandMode::kStrong);
  EXPECT_TRUE(CheckMinimality(m));

  const BandedMatrix constant = BandedMatrix::FromEntries(
      Pair::Make(2, {3}, {1, 1, 1}), FormSystem::Vandermonde(2, kField),
      {{1, 1, 0, 2}, {2, 1, 1, 2}, {3, 1, 2, 0}});
  EXPECT_FALSE(CheckMinimality(constant));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Int r = 2 + static_cast<Int>(rng() % 3);
    const Int k = 1 + static_cast<Int>(rng() % 3);
    const Pair p = oracle::RandomPair(rng, r, k, 0, 6);
    if (!IsStronglyAdmissible(p)) continue;
    EXPECT_TRUE(CheckMinimality(
        BuildBanded(p, FormSystem::Vandermonde(r, kField), BandMode::kStrong)));
  }
}

TEST(DegreeTable, Examples) {
  const FormSystem forms = FormSystem::Vandermonde(2, kField);
  const DegreeTable t1 = ComputeDegreeTable(
      BuildBanded(Pair::Make(2, {3}, {1, 1, 1}), forms, BandMode::kStrong));
  for (Int i = 1; i <= 3; ++i) EXPECT_EQ(t1.at(i, 1), 2);

  const DegreeTable t2 = ComputeDegreeTable(BuildBanded(
      Pair::Make(2, {2, 2}, {1, 1, 1, 1}), forms, BandMode::kStrong));
  EXPECT_EQ(t2.at(1, 2), std::nullopt);
  EXPECT_EQ(t2.at(4, 1), std::nullopt);
  EXPECT_EQ(t2.at(4, 2), 1);

  const DegreeTable t3 = ComputeDegreeTable(BuildBanded(
      Pair::Make(2, {2, 3}, {1, 1, 1, 2}), forms, BandMode::kStrong));
  EXPECT_EQ(t3.at(1, 1), 1);
  EXPECT_EQ(t3.at(2, 1), 1);
  EXPECT_EQ(t3.at(3, 1), 1);
  EXPECT_EQ(t3.at(2, 2), 2);
  EXPECT_EQ(t3.at(3, 2), 2);
  EXPECT_EQ(t3.at(4, 2), 1);
  EXPECT_FALSE(t3.has_nonpositive);
}

TEST(RankModP, MatchesMinorOracle) {
  const PrimeField f(7);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const Int rows = 1 + static_cast<Int>(rng() % 5);
    const Int cols = 1 + static_cast<Int>(rng() % 4);
    std::vector<Residue> m(static_cast<std::size_t>(rows * cols));
    // Small alphabet so deficient matrices are common.
    for (Residue& x : m) x = rng() % 3;
    EXPECT_EQ(RankModP(m, rows, cols, f), oracle::RankByMinors(m, rows, cols, 7));
  }
}

TEST(PointwiseRank, StrongExamplesPass) {
  for (const Pair& p : {Pair::Make(2, {3}, {1, 1, 1}),
                        Pair::Make(2, {2, 2}, {1, 1, 1, 1})}) {
    const BandedMatrix m =
        BuildBanded(p, FormSystem::General(2, kField, 0), BandMode::kStrong);
    const RankReport report = VerifyPointwiseRank(m, 100, 0);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.min_rank, p.k());
    EXPECT_EQ(report.point_count(), 103);
  }
}

TEST(PointwiseRank, WeakModePasses) {
  const Pair p = Pair::Make(3, {2}, {1, 1, 1, 2});
  const BandedMatrix m =
      BuildBanded(p, FormSystem::Coordinate(3, kField), BandMode::kWeak);
  EXPECT_TRUE(CheckMinimality(m));
  const RankReport report = VerifyPointwiseRank(m, 100, 0);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.min_rank, 1);
}

TEST(PointwiseRank, DetectsDeficiency) {
  // All three forms vanish at (0:0:1).
  const FormSystem forms =
      FormSystem::FromForms(kField, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  const BandedMatrix m = BandedMatrix::FromEntries(
      Pair::Make(2, {3}, {1, 1, 1}), forms,
      {{1, 1, 0, 2}, {2, 1, 1, 2}, {3, 1, 2, 2}});
  const RankReport report = EvaluatePointwiseRank(m, 10, 0);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.min_rank, 0);
  EXPECT_EQ(CodeOf([&] { VerifyPointwiseRank(m, 10, 0); }),
            ErrorCode::kRankDeficient);
}

TEST(PointwiseRank, RanksMatchMinorOracleAndSerial) {
  const PrimeField f(101);
  const BandedMatrix m =
      BuildBanded(Pair::Make(3, {3, 3}, {1, 2, 2, 2, 2}),
                  FormSystem::General(3, f, 5), BandMode::kStrong);
  const RankReport report = EvaluatePointwiseRank(m, 40, 9);
  EXPECT_EQ(report, EvaluatePointwiseRankSerial(m, 40, 9));
  EXPECT_EQ(report, EvaluatePointwiseRank(m, 40, 9));
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    EXPECT_EQ(report.ranks[i],
              oracle::RankByMinors(m.EvaluateAt(report.points[i]), m.rows(),
                                   m.cols(), 101));
  }
}

TEST(SamplePoints, DeterministicAndProjective) {
  const std::vector<Point> pts = SamplePoints(kField, 50, 123);
  EXPECT_EQ(pts, SamplePoints(kField, 50, 123));
  EXPECT_NE(pts, SamplePoints(kField, 50, 124));
  for (const Point& pt : pts) {
    EXPECT_TRUE(pt[0] != 0 || pt[1] != 0 || pt[2] != 0);
    for (Residue x : pt) EXPECT_LT(x, kField.p());
  }
}

TEST(CriticalPoints, LieOnBothForms) {
  const FormSystem forms = FormSystem::General(4, kField, 1);
  const std::vector<Point> pts = CriticalPoints(forms);
  ASSERT_EQ(pts.size(), 10u);
  std::size_t idx = 0;
  for (Int l = 0; l <= 4; ++l) {
    for (Int m = l + 1; m <= 4; ++m, ++idx) {
      EXPECT_EQ(forms.Evaluate(l, pts[idx]), 0u);
      EXPECT_EQ(forms.Evaluate(m, pts[idx]), 0u);
    }
  }
}

}  // namespace
}  // namespace p2strata
