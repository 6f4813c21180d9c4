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

#include "p2strata/io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace p2strata::io {

namespace {

constexpr std::string_view kSpaces = " \t\r\n";

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(kSpaces);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpaces);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(kSpaces, pos);
    if (pos == std::string_view::npos) return out;
    const auto end = s.find_first_of(kSpaces, pos);
    out.push_back(s.substr(pos, end - pos));
    if (end == std::string_view::npos) return out;
    pos = end;
  }
}

Int ParseInt(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    Fail("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<Int> ParseIntList(std::string_view s) {
  s = Trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    Fail("expected [..] list, got '" + std::string(s) + "'");
  }
  s = Trim(s.substr(1, s.size() - 2));
  std::vector<Int> values;
  if (s.empty()) return values;
  for (std::string_view item : Split(s, ',')) values.push_back(ParseInt(item));
  return values;
}

std::string FormatList(std::span<const Int> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

Int JsonInt(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    Fail(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<Int>();
}

std::vector<Int> JsonIntList(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    Fail(std::string("missing array field '") + key + "'");
  }
  std::vector<Int> values;
  for (const Json& item : j.at(key)) {
    if (!item.is_number_integer()) {
      Fail(std::string("non-integer entry in '") + key + "'");
    }
    values.push_back(item.get<Int>());
  }
  return values;
}

bool JsonBool(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_boolean()) {
    Fail(std::string("missing boolean field '") + key + "'");
  }
  return j.at(key).get<bool>();
}

Json IntArray(std::span<const Int> xs) {
  Json arr = Json::array();
  for (Int x : xs) arr.push_back(x);
  return arr;
}

}  // namespace

std::string FormatPair(const Pair& p) {
  return "r=" + std::to_string(p.r()) + " a=" + FormatList(p.a()) +
         " b=" + FormatList(p.b());
}

Pair ParsePairText(std::string_view text) {
  std::optional<Int> r;
  std::optional<std::vector<Int>> a;
  std::optional<std::vector<Int>> b;
  for (std::string_view token : Tokens(text)) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      Fail("expected key=value, got '" + std::string(token) + "'");
    }
    const std::string_view key = token.substr(0, eq);
    const std::string_view value = token.substr(eq + 1);
    if (key == "r" && !r) {
      r = ParseInt(value);
    } else if (key == "a" && !a) {
      a = ParseIntList(value);
    } else if (key == "b" && !b) {
      b = ParseIntList(value);
    } else {
      Fail("unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (!r || !a || !b) Fail("pair needs r=, a= and b=");
  return Pair::Make(*r, std::move(*a), std::move(*b));
}

Json PairToJson(const Pair& p) {
  Json j;
  j["r"] = p.r();
  j["a"] = IntArray(p.a());
  j["b"] = IntArray(p.b());
  return j;
}

Pair PairFromJson(const Json& j) {
  return Pair::Make(JsonInt(j, "r"), JsonIntList(j, "a"), JsonIntList(j, "b"));
}

Pair ParsePair(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.front() == '{') {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) Fail("invalid JSON pair");
    return PairFromJson(j);
  }
  return ParsePairText(text);
}

Json NaturalPairToJson(const NaturalPair& natural, Int dim) {
  Json j;
  j["s"] = natural.params.s;
  j["k"] = natural.params.k;
  j["alpha"] = natural.params.alpha;
  j["a"] = IntArray(natural.pair.a());
  j["b"] = IntArray(natural.pair.b());
  j["dim"] = dim;
  return j;
}

NaturalPair NaturalPairFromJson(const Json& j, Int r) {
  const NaturalPairParams params{JsonInt(j, "s"), JsonInt(j, "k"),
                                 JsonInt(j, "alpha")};
  return NaturalPair{params,
                     Pair::Make(r, JsonIntList(j, "a"), JsonIntList(j, "b"))};
}

Json StratumRecordToJson(const StratumRecord& rec) {
  Json j;
  j["pair"] = PairToJson(rec.pair);
  j["c1"] = rec.chern.c1;
  j["c2"] = rec.chern.c2;
  j["r"] = rec.chern.r;
  j["dim"] = rec.dim;
  j["codim"] = rec.codim;
  j["coincidences"] = rec.coincidences;
  j["dd_sum"] = rec.dd_sum;
  j["natural"] = rec.is_natural;
  return j;
}

StratumRecord StratumRecordFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("pair")) Fail("missing object 'pair'");
  StratumRecord rec{PairFromJson(j.at("pair")),
                    ChernData{JsonInt(j, "r"), JsonInt(j, "c1"),
                              JsonInt(j, "c2")}};
  rec.dim = JsonInt(j, "dim");
  rec.codim = JsonInt(j, "codim");
  rec.coincidences = JsonInt(j, "coincidences");
  rec.dd_sum = JsonInt(j, "dd_sum");
  rec.is_natural = JsonBool(j, "natural");
  return rec;
}

std::string StratumCsvHeader() {
  return "pair,c1,c2,r,dim,codim,coincidences,dd_sum,natural";
}

std::string StratumCsvRow(const StratumRecord& rec) {
  std::ostringstream out;
  out << '"' << FormatPair(rec.pair) << "\"," << rec.chern.c1 << ','
      << rec.chern.c2 << ',' << rec.chern.r << ',' << rec.dim << ','
      << rec.codim << ',' << rec.coincidences << ',' << rec.dd_sum << ','
      << (rec.is_natural ? "true" : "false");
  return out.str();
}

std::string CohomologyCsv(const CohomologyTable& table) {
  std::ostringstream out;
  out << "t,h0,h1,h2,chi\n";
  for (const CohomologyRow& row : table.rows) {
    out << row.t << ',' << row.h0 << ',' << row.h1 << ',' << row.h2 << ','
        << row.chi << '\n';
  }
  return out.str();
}

Json CohomologyToJson(const CohomologyTable& table) {
  Json j;
  j["pair"] = PairToJson(table.pair);
  j["generic"] = table.generic;
  Json rows = Json::array();
  for (const CohomologyRow& row : table.rows) {
    Json jr;
    jr["t"] = row.t;
    jr["h0"] = row.h0;
    jr["h1"] = row.h1;
    jr["h2"] = row.h2;
    jr["chi"] = row.chi;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

CohomologyTable CohomologyFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("pair") || !j.contains("rows") ||
      !j.at("rows").is_array()) {
    Fail("cohomology table needs 'pair' and 'rows'");
  }
  CohomologyTable table{PairFromJson(j.at("pair")), JsonBool(j, "generic"),
                        {}};
  for (const Json& jr : j.at("rows")) {
    table.rows.push_back(CohomologyRow{JsonInt(jr, "t"), JsonInt(jr, "h0"),
                                       JsonInt(jr, "h1"), JsonInt(jr, "h2"),
                                       JsonInt(jr, "chi")});
  }
  return table;
}

std::string MatrixDump(const BandedMatrix& m) {
  std::ostringstream out;
  for (const BandEntry& e : m.entries()) {
    out << e.row << ' ' << e.col << ' ' << e.form << ' ' << e.exponent << '\n';
  }
  return out.str();
}

RankSummary Summarize(const RankReport& report) {
  return RankSummary{report.p, report.seed, report.point_count(),
                     report.min_rank, report.pass};
}

Json RankSummaryToJson(const RankSummary& summary) {
  Json j;
  j["p"] = summary.p;
  j["seed"] = summary.seed;
  j["points"] = summary.points;
  j["min_rank"] = summary.min_rank;
  j["pass"] = summary.pass;
  return j;
}

RankSummary RankSummaryFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("seed") ||
      !j.at("p").is_number_unsigned() || !j.at("seed").is_number_unsigned()) {
    Fail("rank report needs unsigned 'p' and 'seed'");
  }
  return RankSummary{j.at("p").get<Residue>(), j.at("seed").get<std::uint64_t>(),
                     JsonInt(j, "points"), JsonInt(j, "min_rank"),
                     JsonBool(j, "pass")};
}

std::vector<ChernData> ParseGrid(std::string_view text) {
  std::map<std::string, std::vector<Int>, std::less<>> fields;
  for (std::string_view token : Tokens(text)) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      Fail("grid field must be key=values, got '" + std::string(token) + "'");
    }
    const std::string key(token.substr(0, eq));
    if (key != "r" && key != "c1" && key != "c2") {
      Fail("unknown grid field '" + key + "'");
    }
    if (fields.contains(key)) Fail("repeated grid field '" + key + "'");
    std::vector<Int>& values = fields[key];
    for (std::string_view item : Split(token.substr(eq + 1), ',')) {
      const auto dots = item.find("..");
      if (dots == std::string_view::npos) {
        values.push_back(ParseInt(item));
        continue;
      }
      const Int lo = ParseInt(item.substr(0, dots));
      const Int hi = ParseInt(item.substr(dots + 2));
      if (lo > hi) Fail("empty range '" + std::string(item) + "'");
      for (Int v = lo; v <= hi; ++v) values.push_back(v);
    }
  }
  for (const char* key : {"r", "c1", "c2"}) {
    if (!fields.contains(key)) Fail(std::string("grid is missing '") + key + "'");
  }
  std::vector<ChernData> grid;
  for (Int r : fields["r"]) {
    if (r < kAmbientDim) Fail("grid rank " + std::to_string(r) + " < 2");
    for (Int c1 : fields["c1"]) {
      for (Int c2 : fields["c2"]) grid.push_back(ChernData{r, c1, c2});
    }
  }
  return grid;
}

}  // namespace p2strata::io
