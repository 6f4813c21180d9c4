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
#include <exception>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enumerate_internal.hpp"
#include "p2strata/strata.hpp"

namespace p2strata {

namespace internal {

void CheckBounds(const ChernData& c, const EnumerationBounds& bounds) {
  if (c.r < kAmbientDim) {
    throw Error(ErrorCode::kRankTooSmall, "rank " + std::to_string(c.r));
  }
  if (bounds.k_max < 1) {
    throw Error(ErrorCode::kBoundsTooSmall, "k_max must be >= 1");
  }
  std::optional<NaturalPair> natural;
  try {
    natural = SolveNaturalPair(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoNaturalPair) throw;
  }
  if (natural && (natural->params.k > bounds.k_max ||
                  Regularity(natural->pair) > bounds.reg_max)) {
    throw Error(ErrorCode::kBoundsTooSmall,
                "natural pair has k = " + std::to_string(natural->params.k) +
                    ", regularity " + std::to_string(natural->params.s) +
                    "; box is k_max = " + std::to_string(bounds.k_max) +
                    ", reg_max = " + std::to_string(bounds.reg_max));
  }
}

void SortRecords(std::vector<StratumRecord>& records) {
  std::sort(records.begin(), records.end(), StratumOrder);
}

}  // namespace internal

namespace {

// Depth-first search over pairs with fixed k and b_1. b is chosen first, then
// a; both sums are pruned against the linear constraint sum a - sum b = c1,
// and the quadratic constraint is checked at the leaves.
class PrunedSearch {
 public:
  PrunedSearch(const ChernData& c, Int k, Int b1, Int reg_max)
      : r_(c.r),
        k_(k),
        c1_(c.c1),
        disc_(2 * c.c2 - c.c1 * c.c1),
        a_hi_(reg_max + 1),
        b_hi_(reg_max),
        a_(static_cast<std::size_t>(k)),
        b_(static_cast<std::size_t>(c.r + k)) {
    b_[0] = b1;
  }

  void Run(std::vector<StratumRecord>& out) {
    out_ = &out;
    ExtendB(1, b_[0], b_[0] * b_[0]);
  }

 private:
  void ExtendB(std::size_t pos, Int sum, Int sumsq) {
    const std::size_t n = b_.size();
    if (pos == n) {
      a_sum_ = c1_ + sum;
      a_sumsq_ = disc_ + sumsq;
      ExtendA(0, 0, 0);
      return;
    }
    // sum b = sum a - c1 <= k (reg_max + 1) - c1.
    const Int b_sum_cap = k_ * a_hi_ - c1_;
    const Int left = static_cast<Int>(n - pos);
    for (Int v = b_[pos - 1]; v <= b_hi_; ++v) {
      if (sum + v * left > b_sum_cap) break;
      b_[pos] = v;
      ExtendB(pos + 1, sum + v, sumsq + v * v);
    }
  }

  void ExtendA(std::size_t pos, Int sum, Int sumsq) {
    const std::size_t k = a_.size();
    if (pos == k) {
      if (sum == a_sum_ && sumsq == a_sumsq_) {
        out_->push_back(MakeStratumRecord(Pair::Make(r_, a_, b_)));
      }
      return;
    }
    const std::size_t r = static_cast<std::size_t>(r_);
    Int lo = b_[r + pos] + 1;
    if (pos > 0) lo = std::max(lo, a_[pos - 1]);
    const Int left_after = static_cast<Int>(k - pos - 1);
    for (Int v = lo; v <= a_hi_; ++v) {
      Int rest_min = 0;
      for (std::size_t i = pos + 1; i < k; ++i) {
        rest_min += std::max(v, b_[r + i] + 1);
      }
      if (sum + v + rest_min > a_sum_) break;
      if (sum + v + left_after * a_hi_ < a_sum_) continue;
      a_[pos] = v;
      ExtendA(pos + 1, sum + v, sumsq + v * v);
    }
  }

  Int r_;
  Int k_;
  Int c1_;
  Int disc_;
  Int a_hi_;
  Int b_hi_;
  Int a_sum_ = 0;
  Int a_sumsq_ = 0;
  std::vector<Int> a_;
  std::vector<Int> b_;
  std::vector<StratumRecord>* out_ = nullptr;
};

}  // namespace

std::vector<StratumRecord> EnumerateStrata(const ChernData& c,
                                           const EnumerationBounds& bounds) {
  internal::CheckBounds(c, bounds);

  struct Unit {
    Int k;
    Int b1;
  };
  std::vector<Unit> units;
  for (Int k = 1; k <= bounds.k_max; ++k) {
    for (Int b1 = internal::MinFirstTwist(c); b1 <= bounds.reg_max; ++b1) {
      units.push_back({k, b1});
    }
  }

  const auto n_units = static_cast<std::ptrdiff_t>(units.size());
  std::vector<std::vector<StratumRecord>> found(units.size());
  std::vector<std::exception_ptr> errors(units.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t u = 0; u < n_units; ++u) {
    const auto idx = static_cast<std::size_t>(u);
    try {
      PrunedSearch(c, units[idx].k, units[idx].b1, bounds.reg_max)
          .Run(found[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<StratumRecord> records;
  for (std::vector<StratumRecord>& chunk : found) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(records));
  }
  internal::SortRecords(records);
  return records;
}

}  // namespace p2strata
