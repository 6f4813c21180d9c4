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

#include "p2strata/strata.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "enumerate_internal.hpp"
#include "p2strata/cohom.hpp"

namespace p2strata {

namespace {

__extension__ using Wide = __int128;

// Sum over all (x, y) of h^0(O(x - y)): dim Hom(O(-x), O(-y)) summed.
Int HomDim(std::span<const Int> from, std::span<const Int> to) {
  Int total = 0;
  for (Int x : from) {
    for (Int y : to) total += H0Line(x - y);
  }
  return total;
}

Int Coincidences(const Pair& p) {
  Int n = 0;
  for (Int a : p.a()) {
    n += std::count(p.b().begin(), p.b().end(), a);
  }
  return n;
}

std::string Describe(const ChernData& c) {
  return "(r, c1, c2) = (" + std::to_string(c.r) + ", " +
         std::to_string(c.c1) + ", " + std::to_string(c.c2) + ")";
}

Wide QuadraticAt(Int r, Int linear, Int rho) {
  const Wide x = rho;
  return Wide{r} * x * x + Wide{linear} * x;
}

// Generic-model h^1(E(t)) = max(0, h^2(F1(t)) - h^2(F0(t))).
Int GenericH1(const Pair& p, Int t) {
  Int h2_f1 = 0;
  Int h2_f0 = 0;
  for (Int a : p.a()) h2_f1 += H2Line(t - a);
  for (Int b : p.b()) h2_f0 += H2Line(t - b);
  return std::max<Int>(0, h2_f1 - h2_f0);
}

}  // namespace

Int ModuliDimension(const ChernData& c) {
  return 2 * c.r * c.c2 - (c.r - 1) * c.c1 * c.c1 - c.r * c.r + 1;
}

Int StratumDimension(const Pair& p) {
  return HomDim(p.a(), p.b()) + HomDim(p.b(), p.a()) - HomDim(p.a(), p.a()) -
         HomDim(p.b(), p.b()) + 1 - Coincidences(p);
}

Int StratumCodimension(const Pair& p) {
  return ModuliDimension(ChernClasses(p)) - StratumDimension(p);
}

CodimBound CodimLowerBound(const Pair& p) {
  if (!IsStronglyAdmissible(p)) {
    throw Error(ErrorCode::kNotAdmissible,
                "codimension bound needs a strongly admissible pair");
  }
  const Int r = p.r();
  const Int k = p.k();
  Int dd = 0;
  // F1 against the tail b_{r+1}..b_{r+k}; the head b_1..b_r contributes
  // only through h^1(E(b_i)), which is not a function of the pair.
  for (Int i = 1; i <= k; ++i) {
    for (Int j = 1; j <= k; ++j) {
      dd += H2Line(p.b_at(r + i) - p.a_at(j)) -
            H2Line(p.b_at(r + i) - p.b_at(r + j)) -
            H2Line(p.a_at(i) - p.a_at(j)) + H2Line(p.a_at(i) - p.b_at(r + j));
    }
  }
  if (dd < 0) {
    throw Error(ErrorCode::kIndexModelViolation,
                "double-difference sum " + std::to_string(dd) + " < 0");
  }
  return CodimBound{Coincidences(p), dd};
}

bool IsNatural(const Pair& p) {
  return IsStronglyAdmissible(p) && p.b().back() < p.a().front() &&
         p.a().back() <= p.b().front() + 2;
}

std::pair<Int, Int> RegularityInterval(Int r, Int c1, Int s) {
  const Int base = r * s * s + 2 * c1 * s;
  return {base - c1 - r * s + 1, base + c1 + r * s};
}

std::optional<Int> RegularityByUpperSet(const ChernData& c) {
  const Int r = c.r;
  const Int linear = 2 * c.c1 - r;
  const Wide bound = Wide{2} * c.c2 - Wide{c.c1} * c.c1 + c.c1 - 1;
  // r rho^2 + linear rho is convex with vertex at -linear / 2r, so its
  // sublevel set is an integer interval containing the integer minimizer.
  Int rho = internal::FloorDiv(-linear, 2 * r);
  if (QuadraticAt(r, linear, rho + 1) < QuadraticAt(r, linear, rho)) ++rho;
  if (QuadraticAt(r, linear, rho) > bound) return std::nullopt;
  while (QuadraticAt(r, linear, rho + 1) <= bound) ++rho;
  return rho;
}

Int RegularityByLowerSet(const ChernData& c) {
  const Int r = c.r;
  const Int linear = 2 * c.c1 + r;
  const Wide target = Wide{2} * c.c2 - Wide{c.c1} * c.c1 - c.c1;
  Int rho = internal::CeilDiv(-linear, 2 * r);
  while (QuadraticAt(r, linear, rho) < target) ++rho;
  return rho;
}

Pair ExpandNaturalPair(Int r, const NaturalPairParams& params) {
  const auto [s, k, alpha] = params;
  if (k < 1 || alpha < -k + 1 || alpha > k + r) {
    throw Error(ErrorCode::kNoNaturalPair,
                "(s, k, alpha) = (" + std::to_string(s) + ", " +
                    std::to_string(k) + ", " + std::to_string(alpha) +
                    ") violates k >= 1, -k + 1 <= alpha <= k + r");
  }
  std::vector<Int> a;
  std::vector<Int> b;
  if (alpha >= 0) {
    a.assign(static_cast<std::size_t>(k), s + 1);
    b.assign(static_cast<std::size_t>(r + k - alpha), s - 1);
    b.insert(b.end(), static_cast<std::size_t>(alpha), s);
  } else {
    a.assign(static_cast<std::size_t>(-alpha), s);
    a.insert(a.end(), static_cast<std::size_t>(k + alpha), s + 1);
    b.assign(static_cast<std::size_t>(r + k), s - 1);
  }
  return Pair::Make(r, std::move(a), std::move(b));
}

NaturalPair SolveNaturalPair(const ChernData& c) {
  if (c.r < kAmbientDim) {
    throw Error(ErrorCode::kRankTooSmall, "rank " + std::to_string(c.r));
  }
  const std::optional<Int> upper = RegularityByUpperSet(c);
  if (!upper) {
    throw Error(ErrorCode::kNoNaturalPair,
                Describe(c) + ": no integer rho with r rho^2 + 2 c1 rho - "
                              "r rho <= 2 c2 - c1^2 + c1 - 1");
  }
  const Int s = *upper;
  if (RegularityByLowerSet(c) != s) {
    throw std::logic_error("regularity routes disagree for " + Describe(c));
  }

  const Int r = c.r;
  const Int alpha = 2 * c.c2 - c.c1 * c.c1 + r - r * s * s - 2 * c.c1 * s;
  const Int twice_k = r * s + c.c1 - r + std::abs(alpha);
  if (twice_k % 2 != 0) {
    throw Error(ErrorCode::kNoNaturalPair,
                Describe(c) + ": 2k = " + std::to_string(twice_k) + " is odd");
  }
  const NaturalPairParams params{s, twice_k / 2, alpha};
  Pair pair = ExpandNaturalPair(r, params);

  if (ChernClasses(pair) != c || !IsNatural(pair)) {
    throw std::logic_error("natural pair expansion inconsistent for " +
                           Describe(c));
  }
  if (ModuliDimension(c) < 0) {
    throw Error(ErrorCode::kNoNaturalPair,
                Describe(c) + ": expected dimension " +
                    std::to_string(ModuliDimension(c)) + " < 0");
  }
  if (!StabilityNecessary(pair, /*strict=*/true)) {
    throw Error(ErrorCode::kNoNaturalPair,
                Describe(c) + ": natural pair violates r b_1 + c1 > 0");
  }
  return NaturalPair{params, std::move(pair)};
}

Int H0Threshold(const ChernData& c) {
  const NaturalPair natural = SolveNaturalPair(c);
  const auto [s, k, alpha] = natural.params;
  const Int by_params = alpha == k + c.r ? s : s - 1;
  const bool arithmetic = c.r * s * s + 2 * c.c1 * s + c.r * s ==
                          2 * c.c2 - c.c1 * c.c1 - c.c1;
  const Int by_arithmetic = arithmetic ? s : s - 1;
  if (by_params != by_arithmetic) {
    throw std::logic_error("h0 threshold routes disagree for " + Describe(c));
  }
  return by_params;
}

StratumRecord MakeStratumRecord(const Pair& p) {
  StratumRecord rec{p, ChernClasses(p)};
  rec.dim = StratumDimension(p);
  rec.codim = ModuliDimension(rec.chern) - rec.dim;
  const CodimBound bound = CodimLowerBound(p);
  rec.coincidences = bound.coincidences;
  rec.dd_sum = bound.dd_sum;
  rec.is_natural = IsNatural(p);
  return rec;
}

bool StratumOrder(const StratumRecord& lhs, const StratumRecord& rhs) {
  if (lhs.codim != rhs.codim) return lhs.codim < rhs.codim;
  const Pair& lp = lhs.pair;
  const Pair& rp = rhs.pair;
  if (lp.k() != rp.k()) return lp.k() < rp.k();
  if (!std::ranges::equal(lp.a(), rp.a())) {
    return std::ranges::lexicographical_compare(lp.a(), rp.a());
  }
  return std::ranges::lexicographical_compare(lp.b(), rp.b());
}

EnumerationBounds DefaultBounds(const NaturalPair& natural) {
  return EnumerationBounds{natural.params.k + 3, natural.params.s + 2};
}

UniquenessReport VerifyUniqueness(const ChernData& c,
                                  const EnumerationBounds& bounds) {
  UniquenessReport report{c, SolveNaturalPair(c), bounds, {}};
  report.records = EnumerateStrata(c, bounds);

  std::vector<StratumRecord> offending;
  std::vector<StratumRecord> open;
  for (const StratumRecord& rec : report.records) {
    if (rec.codim == 0) open.push_back(rec);
    if (rec.codim < 0 || rec.codim < rec.coincidences + rec.dd_sum) {
      offending.push_back(rec);
    }
    Int h1 = 0;
    for (Int i = 1; i <= rec.pair.r(); ++i) {
      h1 += GenericH1(rec.pair, rec.pair.b_at(i));
    }
    if (rec.codim - rec.coincidences - rec.dd_sum != h1) {
      ++report.h1_model_mismatches;
    }
  }
  if (!offending.empty()) {
    throw VerificationFailed(
        Describe(c) + ": " + std::to_string(offending.size()) +
            " record(s) with codim < coincidences + dd_sum or codim < 0",
        std::move(offending));
  }
  if (open.size() != 1) {
    throw VerificationFailed(Describe(c) + ": " + std::to_string(open.size()) +
                                 " codimension-0 strata, expected 1",
                             std::move(open));
  }
  if (open.front().pair != report.natural.pair) {
    throw VerificationFailed(
        Describe(c) + ": codimension-0 stratum is not the natural pair",
        std::move(open));
  }
  return report;
}

UniquenessReport VerifyUniqueness(const ChernData& c) {
  return VerifyUniqueness(c, DefaultBounds(SolveNaturalPair(c)));
}

}  // namespace p2strata
