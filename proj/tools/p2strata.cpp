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

// p2strata: Betti-number strata of moduli of stable bundles on P^2.
//
//   p2strata natural-pair -r 2 --c1 -1 --c2 1
//   p2strata strata       -r 2 --c1 0 --c2 3 [--k-max K --reg-max R]
//   p2strata cohomology   (-r R --c1 C --c2 D | --pair P) [--t-min --t-max]
//   p2strata resolve      (-r R --c1 C --c2 D | --pair P) [--seed --samples]
//   p2strata verify       (--grid 'r=2 c1=-1..0 c2=1..4' | -r --c1 --c2)
//
// Exit codes: 0 ok, 1 usage, 2 no natural pair, 3 bounds, 4 verification.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "p2strata/cohom.hpp"
#include "p2strata/io.hpp"
#include "p2strata/pairs.hpp"
#include "p2strata/resolution.hpp"
#include "p2strata/strata.hpp"

namespace {

using p2strata::ChernData;
using p2strata::Error;
using p2strata::ErrorCode;
using p2strata::Int;
using p2strata::Pair;
namespace io = p2strata::io;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNoNaturalPair = 2,
  kBounds = 3,
  kVerification = 4,
};

struct RunConfig {
  std::optional<Int> rank;
  std::optional<Int> c1;
  std::optional<Int> c2;
  std::optional<std::string> pair;
  std::optional<Int> k_max;
  std::optional<Int> reg_max;
  std::optional<Int> t_min;
  std::optional<Int> t_max;
  std::uint64_t seed = 0;
  Int samples = 100;
  std::uint64_t prime = p2strata::kDefaultPrime;
  std::string format = "json";
  std::string mode = "strong";
  std::optional<std::string> grid;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoNaturalPair: return kNoNaturalPair;
    case ErrorCode::kBoundsTooSmall: return kBounds;
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kRankDeficient:
    case ErrorCode::kIndexModelViolation: return kVerification;
    default: return kUsage;
  }
}

std::optional<ChernData> ChernFrom(const RunConfig& cfg) {
  const int given = cfg.rank.has_value() + cfg.c1.has_value() +
                    cfg.c2.has_value();
  if (given == 0) return std::nullopt;
  if (given != 3) throw UsageError("need all of -r, --c1 and --c2");
  return ChernData{*cfg.rank, *cfg.c1, *cfg.c2};
}

ChernData RequireChern(const RunConfig& cfg) {
  const std::optional<ChernData> c = ChernFrom(cfg);
  if (!c) throw UsageError("need -r, --c1 and --c2");
  return *c;
}

// Either the explicit pair or the natural pair of the Chern data.
Pair PairFrom(const RunConfig& cfg) {
  const std::optional<ChernData> c = ChernFrom(cfg);
  if (cfg.pair && c) throw UsageError("give either --pair or Chern data");
  if (cfg.pair) return io::ParsePair(*cfg.pair);
  if (!c) throw UsageError("need --pair or -r, --c1, --c2");
  return p2strata::SolveNaturalPair(*c).pair;
}

p2strata::EnumerationBounds BoundsFor(const RunConfig& cfg,
                                      const ChernData& c) {
  if (cfg.k_max && cfg.reg_max) return {*cfg.k_max, *cfg.reg_max};
  const p2strata::EnumerationBounds defaults =
      p2strata::DefaultBounds(p2strata::SolveNaturalPair(c));
  return {cfg.k_max.value_or(defaults.k_max),
          cfg.reg_max.value_or(defaults.reg_max)};
}

void Note(const RunConfig& cfg, const std::string& message) {
  if (cfg.verbose) std::cerr << "p2strata: " << message << '\n';
}

int RunNaturalPair(const RunConfig& cfg) {
  const ChernData c = RequireChern(cfg);
  const p2strata::NaturalPair natural = p2strata::SolveNaturalPair(c);
  const Int dim = p2strata::StratumDimension(natural.pair);
  if (cfg.format == "csv") {
    std::cout << "s,k,alpha,a,b,dim\n"
              << natural.params.s << ',' << natural.params.k << ','
              << natural.params.alpha << ",\""
              << io::PairToJson(natural.pair)["a"].dump() << "\",\""
              << io::PairToJson(natural.pair)["b"].dump() << "\"," << dim
              << '\n';
  } else {
    std::cout << io::NaturalPairToJson(natural, dim).dump() << '\n';
  }
  return kOk;
}

int RunStrata(const RunConfig& cfg) {
  const ChernData c = RequireChern(cfg);
  const p2strata::EnumerationBounds bounds = BoundsFor(cfg, c);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<p2strata::StratumRecord> records =
      p2strata::EnumerateStrata(c, bounds);
  std::cerr << "p2strata: enumeration is complete only for k <= "
            << bounds.k_max << " and regularity <= " << bounds.reg_max
            << "; strata with codim > 0 are not checked for nonemptiness\n";
  if (cfg.format == "csv") {
    std::cout << io::StratumCsvHeader() << '\n';
    for (const auto& rec : records) std::cout << io::StratumCsvRow(rec) << '\n';
  } else {
    for (const auto& rec : records) {
      std::cout << io::StratumRecordToJson(rec).dump() << '\n';
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  Note(cfg, std::to_string(records.size()) + " strata in " +
                std::to_string(elapsed.count()) + " s on " +
                std::to_string(omp_get_max_threads()) + " threads");
  return kOk;
}

int RunCohomology(const RunConfig& cfg) {
  const Pair p = PairFrom(cfg);
  const Int reg = p2strata::Regularity(p);
  const Int t_min = cfg.t_min.value_or(reg - 6);
  const Int t_max = cfg.t_max.value_or(reg + 4);
  const p2strata::CohomologyTable table =
      p2strata::GeneralCohomologyTable(p, t_min, t_max);
  if (cfg.format == "csv") {
    std::cout << io::CohomologyCsv(table);
    if (table.generic) {
      Note(cfg, "pair is not natural; h1 and h2 assume maximal rank");
    }
  } else {
    std::cout << io::CohomologyToJson(table).dump() << '\n';
  }
  return kOk;
}

int RunResolve(const RunConfig& cfg) {
  const Pair p = PairFrom(cfg);
  const p2strata::PrimeField field(cfg.prime);
  if (cfg.prime < (1u << 16)) {
    std::cerr << "p2strata: warning: p = " << cfg.prime
              << " < 2^16 raises the chance of missing a rank drop\n";
  }
  if (cfg.samples < 0) throw UsageError("--samples must be >= 0");
  p2strata::BandMode mode;
  std::optional<p2strata::FormSystem> forms;
  if (cfg.mode == "strong") {
    mode = p2strata::BandMode::kStrong;
    forms = p2strata::FormSystem::General(p.r(), field, cfg.seed);
  } else {
    mode = p2strata::BandMode::kWeak;
    forms = p2strata::FormSystem::Coordinate(p.r(), field);
  }
  const p2strata::BandedMatrix m = p2strata::BuildBanded(p, *forms, mode);
  const p2strata::RankReport report =
      p2strata::EvaluatePointwiseRank(m, cfg.samples, cfg.seed);
  std::cout << io::MatrixDump(m)
            << io::RankSummaryToJson(io::Summarize(report)).dump() << '\n';
  Note(cfg, std::string("minimal: ") +
                (p2strata::CheckMinimality(m) ? "yes" : "no"));
  return report.pass ? kOk : kVerification;
}

int RunVerify(const RunConfig& cfg) {
  std::vector<ChernData> grid;
  if (cfg.grid) {
    if (ChernFrom(cfg)) throw UsageError("give either --grid or Chern data");
    grid = io::ParseGrid(*cfg.grid);
  } else {
    grid.push_back(RequireChern(cfg));
  }

  int worst = kOk;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  for (const ChernData& c : grid) {
    io::Json line;
    line["r"] = c.r;
    line["c1"] = c.c1;
    line["c2"] = c.c2;
    try {
      const p2strata::EnumerationBounds bounds = BoundsFor(cfg, c);
      const p2strata::UniquenessReport report =
          p2strata::VerifyUniqueness(c, bounds);
      line["status"] = "pass";
      line["natural"] = io::NaturalPairToJson(
          report.natural, p2strata::ModuliDimension(c));
      line["k_max"] = bounds.k_max;
      line["reg_max"] = bounds.reg_max;
      line["h1_model_mismatches"] = report.h1_model_mismatches;
      io::Json strata = io::Json::array();
      for (const auto& rec : report.records) {
        strata.push_back(io::StratumRecordToJson(rec));
      }
      line["strata"] = std::move(strata);
      ++passed;
    } catch (const p2strata::VerificationFailed& e) {
      line["status"] = "fail";
      line["message"] = e.what();
      io::Json offending = io::Json::array();
      for (const auto& rec : e.offending()) {
        offending.push_back(io::StratumRecordToJson(rec));
      }
      line["offending"] = std::move(offending);
      worst = kVerification;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNoNaturalPair) {
        line["status"] = "skip";
        ++skipped;
      } else {
        line["status"] = "error";
        const int code = ExitFor(e.code());
        if (worst != kVerification) worst = std::max(worst, code);
      }
      line["message"] = e.what();
    }
    std::cout << line.dump() << '\n';
  }
  Note(cfg, std::to_string(passed) + " passed, " + std::to_string(skipped) +
                " skipped (hypothesis 'nonempty' unverifiable), " +
                std::to_string(grid.size() - passed - skipped) + " other");
  // A single datum without a natural pair is reported as such.
  if (grid.size() == 1 && skipped == 1) return kNoNaturalPair;
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti-number strata of moduli of stable bundles on P^2"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  const auto add_chern = [&](CLI::App* sub) {
    sub->add_option("-r,--rank", cfg.rank, "rank r >= 2");
    sub->add_option("--c1", cfg.c1, "first Chern class");
    sub->add_option("--c2", cfg.c2, "second Chern class");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--verbose", cfg.verbose, "metadata on stderr");
  };
  const auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--k-max", cfg.k_max, "largest k searched")
        ->check(CLI::PositiveNumber);
    sub->add_option("--reg-max", cfg.reg_max, "largest regularity searched");
  };

  CLI::App* natural = app.add_subcommand("natural-pair",
                                         "natural pair of M(r, c1, c2)");
  add_chern(natural);
  add_common(natural);

  CLI::App* strata = app.add_subcommand("strata", "enumerate strata");
  add_chern(strata);
  add_bounds(strata);
  add_common(strata);

  CLI::App* cohomology = app.add_subcommand(
      "cohomology", "cohomology table of the general bundle");
  add_chern(cohomology);
  cohomology->add_option("--pair", cfg.pair, "pair as JSON or r=.. a=[..] b=[..]");
  cohomology->add_option("--t-min", cfg.t_min, "first twist");
  cohomology->add_option("--t-max", cfg.t_max, "last twist");
  add_common(cohomology);

  CLI::App* resolve = app.add_subcommand(
      "resolve", "banded presentation matrix and pointwise rank report");
  add_chern(resolve);
  resolve->add_option("--pair", cfg.pair, "pair as JSON or r=.. a=[..] b=[..]");
  resolve->add_option("--seed", cfg.seed, "seed for forms and points");
  resolve->add_option("--samples", cfg.samples, "random points");
  resolve->add_option("--prime", cfg.prime, "field characteristic");
  resolve->add_option("--mode", cfg.mode, "strong or weak band")
      ->check(CLI::IsMember({"strong", "weak"}));
  add_common(resolve);

  CLI::App* verify = app.add_subcommand(
      "verify", "check uniqueness of the codimension-0 stratum");
  add_chern(verify);
  verify->add_option("--grid", cfg.grid, "e.g. 'r=2 c1=-1..0 c2=1..4'");
  add_bounds(verify);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*natural) return RunNaturalPair(cfg);
    if (*strata) return RunStrata(cfg);
    if (*cohomology) return RunCohomology(cfg);
    if (*resolve) return RunResolve(cfg);
    if (*verify) return RunVerify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "p2strata: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "p2strata: " << e.what() << '\n';
    if (e.code() == ErrorCode::kNoNaturalPair) {
      std::cerr << "p2strata: hypothesis 'nonempty' unverifiable here\n";
    }
    return ExitFor(e.code());
  }
  return kUsage;
}
