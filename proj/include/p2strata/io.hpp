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

// Text, JSON and CSV encodings shared by the CLI and its consumers. JSON
// objects keep a fixed key order so that output is byte-stable.

#ifndef P2STRATA_IO_HPP_
#define P2STRATA_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "p2strata/cohom.hpp"
#include "p2strata/pairs.hpp"
#include "p2strata/resolution.hpp"
#include "p2strata/strata.hpp"

namespace p2strata::io {

using Json = nlohmann::ordered_json;

// `r=2 a=[2,3] b=[1,1,1,2]`
std::string FormatPair(const Pair& p);
Pair ParsePairText(std::string_view text);

// {"r":2,"a":[2,3],"b":[1,1,1,2]}
Json PairToJson(const Pair& p);
Pair PairFromJson(const Json& j);

// JSON when the text starts with '{', the textual form otherwise.
Pair ParsePair(std::string_view text);

// {"s":..,"k":..,"alpha":..,"a":[..],"b":[..],"dim":..}
Json NaturalPairToJson(const NaturalPair& natural, Int dim);
NaturalPair NaturalPairFromJson(const Json& j, Int r);

Json StratumRecordToJson(const StratumRecord& rec);
StratumRecord StratumRecordFromJson(const Json& j);

std::string StratumCsvHeader();
std::string StratumCsvRow(const StratumRecord& rec);

// Header `t,h0,h1,h2,chi`, one LF-terminated line per row.
std::string CohomologyCsv(const CohomologyTable& table);
Json CohomologyToJson(const CohomologyTable& table);
CohomologyTable CohomologyFromJson(const Json& j);

// One line per entry: `i j form_index exponent`, 1-based, sorted by (i, j).
std::string MatrixDump(const BandedMatrix& m);

struct RankSummary {
  Residue p = kDefaultPrime;
  std::uint64_t seed = 0;
  Int points = 0;
  Int min_rank = 0;
  bool pass = false;

  friend bool operator==(const RankSummary&, const RankSummary&) = default;
};

RankSummary Summarize(const RankReport& report);
// {"p":65537,"seed":..,"points":N,"min_rank":k,"pass":bool}
Json RankSummaryToJson(const RankSummary& summary);
RankSummary RankSummaryFromJson(const Json& j);

// Whitespace-separated fields `r=..`, `c1=..`, `c2=..`; each value is an
// integer, an inclusive range `lo..hi`, or a comma list. Expanded in
// (r, c1, c2) order. Throws kParse on malformed input.
std::vector<ChernData> ParseGrid(std::string_view text);

}  // namespace p2strata::io

#endif  // P2STRATA_IO_HPP_
