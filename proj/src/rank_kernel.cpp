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
#include <cstddef>
#include <string>
#include <vector>

#include "p2strata/resolution.hpp"

namespace p2strata {

namespace {

RankReport PrepareReport(const BandedMatrix& m, Int n_samples,
                         std::uint64_t seed) {
  RankReport report;
  report.p = m.forms().field().p();
  report.seed = seed;
  report.expected_rank = m.cols();
  report.points = CriticalPoints(m.forms());
  const std::vector<Point> samples =
      SamplePoints(m.forms().field(), n_samples, seed);
  report.points.insert(report.points.end(), samples.begin(), samples.end());
  report.ranks.assign(report.points.size(), 0);
  return report;
}

Int RankAt(const BandedMatrix& m, const Point& point) {
  return RankModP(m.EvaluateAt(point), m.rows(), m.cols(), m.forms().field());
}

void Summarize(RankReport& report) {
  report.min_rank = report.ranks.empty()
                        ? report.expected_rank
                        : *std::min_element(report.ranks.begin(),
                                            report.ranks.end());
  report.pass = !report.ranks.empty() &&
                report.min_rank == report.expected_rank;
}

}  // namespace

RankReport EvaluatePointwiseRank(const BandedMatrix& m, Int n_samples,
                                 std::uint64_t seed) {
  RankReport report = PrepareReport(m, n_samples, seed);
  const auto n = static_cast<std::ptrdiff_t>(report.points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    report.ranks[idx] = RankAt(m, report.points[idx]);
  }
  Summarize(report);
  return report;
}

RankReport EvaluatePointwiseRankSerial(const BandedMatrix& m, Int n_samples,
                                       std::uint64_t seed) {
  RankReport report = PrepareReport(m, n_samples, seed);
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    report.ranks[i] = RankAt(m, report.points[i]);
  }
  Summarize(report);
  return report;
}

RankReport VerifyPointwiseRank(const BandedMatrix& m, Int n_samples,
                               std::uint64_t seed) {
  RankReport report = EvaluatePointwiseRank(m, n_samples, seed);
  if (!report.pass) {
    const auto bad = std::find_if(
        report.ranks.begin(), report.ranks.end(),
        [&](Int rank) { return rank < report.expected_rank; });
    const auto idx = static_cast<std::size_t>(bad - report.ranks.begin());
    std::string where = "no points evaluated";
    if (bad != report.ranks.end()) {
      const Point& pt = report.points[idx];
      where = "rank " + std::to_string(*bad) + " at (" +
              std::to_string(pt[0]) + ":" + std::to_string(pt[1]) + ":" +
              std::to_string(pt[2]) + ")";
    }
    throw Error(ErrorCode::kRankDeficient,
                where + ", expected " + std::to_string(report.expected_rank));
  }
  return report;
}

}  // namespace p2strata
