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

// Explicit presentation matrices for a pair and a pointwise certificate that
// their cokernel is locally free.
//
// Column j of the (r+k) x k banded matrix carries w_0^{a_j - b_j}, ...,
// w_r^{a_j - b_{j+r}} in rows j..j+r, where w_0..w_r are linear forms on P^2.
// Entries are kept as (form index, exponent) and only ever evaluated at
// points of P^2(F_p); no polynomial arithmetic is needed.

#ifndef P2STRATA_RESOLUTION_HPP_
#define P2STRATA_RESOLUTION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "p2strata/pairs.hpp"

namespace p2strata {

using Residue = std::uint64_t;

inline constexpr Residue kDefaultPrime = 65537;

// Z/p for a prime p < 2^32, so products fit in 64 bits.
class PrimeField {
 public:
  // Throws kBadModulus unless p is a prime below 2^32.
  explicit PrimeField(Residue p = kDefaultPrime);

  Residue p() const { return p_; }

  Residue Reduce(Int x) const;
  Residue Add(Residue x, Residue y) const { return (x + y) % p_; }
  Residue Sub(Residue x, Residue y) const { return (x + p_ - y) % p_; }
  Residue Mul(Residue x, Residue y) const { return (x * y) % p_; }
  Residue Pow(Residue base, Int exponent) const;
  Residue Inverse(Residue x) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool IsPrime(Residue n);

// Homogeneous coordinates (x0 : x1 : x2), not all zero.
using Point = std::array<Residue, 3>;
using LinearForm = std::array<Residue, 3>;

// r + 1 linear forms w_0..w_r over F_p.
class FormSystem {
 public:
  // Random forms drawn from `seed`, redrawn until in general position.
  static FormSystem General(Int r, const PrimeField& field, std::uint64_t seed);
  // w_l = x0 + l x1 + l^2 x2; in general position whenever r < p.
  static FormSystem Vandermonde(Int r, const PrimeField& field);
  // (x0, x1, x2, 0, ..., 0), the system used for weakly admissible pairs.
  static FormSystem Coordinate(Int r, const PrimeField& field);
  // Unchecked; for tests and callers bringing their own forms.
  static FormSystem FromForms(const PrimeField& field,
                              std::vector<LinearForm> forms);

  Int r() const { return static_cast<Int>(forms_.size()) - 1; }
  const PrimeField& field() const { return field_; }
  std::span<const LinearForm> forms() const { return forms_; }

  // Every 3x3 minor of the (r+1) x 3 coefficient matrix is nonzero.
  bool InGeneralPosition() const;
  bool IsCoordinateSystem() const;
  bool IsZeroForm(Int index) const;

  Residue Evaluate(Int index, const Point& point) const;

 private:
  FormSystem(PrimeField field, std::vector<LinearForm> forms)
      : field_(field), forms_(std::move(forms)) {}

  PrimeField field_;
  std::vector<LinearForm> forms_;
};

enum class BandMode { kStrong, kWeak };

// Entry w_form^exponent at 1-based (row, col).
struct BandEntry {
  Int row = 0;
  Int col = 0;
  Int form = 0;
  Int exponent = 0;

  friend bool operator==(const BandEntry&, const BandEntry&) = default;
};

class BandedMatrix {
 public:
  // Entries are sorted by (row, col); absent positions are zero.
  static BandedMatrix FromEntries(Pair pair, FormSystem forms,
                                  std::vector<BandEntry> entries);

  Int rows() const { return pair_.r() + pair_.k(); }
  Int cols() const { return pair_.k(); }
  const Pair& pair() const { return pair_; }
  const FormSystem& forms() const { return forms_; }
  std::span<const BandEntry> entries() const { return entries_; }

  // Dense rows() x cols() evaluation, row-major.
  std::vector<Residue> EvaluateAt(const Point& point) const;

 private:
  BandedMatrix(Pair pair, FormSystem forms, std::vector<BandEntry> entries)
      : pair_(std::move(pair)),
        forms_(std::move(forms)),
        entries_(std::move(entries)) {}

  Pair pair_;
  FormSystem forms_;
  std::vector<BandEntry> entries_;
};

// Strong mode: strongly admissible pair, forms in general position, full band
// 0 <= i - j <= r. Weak mode: weakly admissible pair, coordinate system, band
// 0 <= i - j <= 2 (the remaining forms vanish identically).
// Throws kNotAdmissibleForMode or kDegenerateForms.
BandedMatrix BuildBanded(const Pair& p, const FormSystem& forms,
                         BandMode mode);

// Weakly admissible and no constant (exponent 0) entry.
bool CheckMinimality(const BandedMatrix& m);

struct DegreeTable {
  Int rows = 0;
  Int cols = 0;
  // a_j - b_i on the band, nullopt elsewhere; row-major.
  std::vector<std::optional<Int>> cells;
  bool has_nonpositive = false;

  std::optional<Int> at(Int row, Int col) const {
    return cells[static_cast<std::size_t>((row - 1) * cols + (col - 1))];
  }
};

DegreeTable ComputeDegreeTable(const BandedMatrix& m);

// Rank of a rows x cols row-major matrix over the field.
Int RankModP(std::vector<Residue> matrix, Int rows, Int cols,
             const PrimeField& field);

// `count` points of P^2(F_p) drawn deterministically from `seed`.
std::vector<Point> SamplePoints(const PrimeField& field, Int count,
                                std::uint64_t seed);

// w_l = w_m = 0 for every pair l < m of nonzero forms, in (l, m) order.
std::vector<Point> CriticalPoints(const FormSystem& forms);

struct RankReport {
  Residue p = kDefaultPrime;
  std::uint64_t seed = 0;
  Int expected_rank = 0;
  Int min_rank = 0;
  bool pass = false;
  // Critical points first, then random samples.
  std::vector<Point> points;
  std::vector<Int> ranks;

  Int point_count() const { return static_cast<Int>(points.size()); }

  friend bool operator==(const RankReport&, const RankReport&) = default;
};

// Rank at every critical point and at n_samples random points; OpenMP over
// points, aggregated in point order.
RankReport EvaluatePointwiseRank(const BandedMatrix& m, Int n_samples,
                                 std::uint64_t seed);

// Single-threaded reference for EvaluatePointwiseRank.
RankReport EvaluatePointwiseRankSerial(const BandedMatrix& m, Int n_samples,
                                       std::uint64_t seed);

// EvaluatePointwiseRank, throwing kRankDeficient unless it passes.
RankReport VerifyPointwiseRank(const BandedMatrix& m, Int n_samples,
                               std::uint64_t seed);

}  // namespace p2strata

#endif  // P2STRATA_RESOLUTION_HPP_
