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

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <tuple>

#include "rng_internal.hpp"

namespace p2strata {

bool IsPrime(Residue n) {
  if (n < 2) return false;
  for (Residue d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (p >= (Residue{1} << 32) || !IsPrime(p)) {
    throw Error(ErrorCode::kBadModulus,
                std::to_string(p) + " is not a prime below 2^32");
  }
}

Residue PrimeField::Reduce(Int x) const {
  const Int m = x % static_cast<Int>(p_);
  return static_cast<Residue>(m < 0 ? m + static_cast<Int>(p_) : m);
}

Residue PrimeField::Pow(Residue base, Int exponent) const {
  Residue result = 1 % p_;
  base %= p_;
  while (exponent > 0) {
    if (exponent & 1) result = Mul(result, base);
    base = Mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Residue PrimeField::Inverse(Residue x) const { return Pow(x, p_ - 2); }

namespace {

Residue Det3(const PrimeField& f, const LinearForm& u, const LinearForm& v,
             const LinearForm& w) {
  const Residue plus = f.Add(f.Add(f.Mul(u[0], f.Mul(v[1], w[2])),
                                   f.Mul(u[1], f.Mul(v[2], w[0]))),
                             f.Mul(u[2], f.Mul(v[0], w[1])));
  const Residue minus = f.Add(f.Add(f.Mul(u[2], f.Mul(v[1], w[0])),
                                    f.Mul(u[0], f.Mul(v[2], w[1]))),
                              f.Mul(u[1], f.Mul(v[0], w[2])));
  return f.Sub(plus, minus);
}

constexpr int kMaxFormDraws = 64;

}  // namespace

FormSystem FormSystem::General(Int r, const PrimeField& field,
                               std::uint64_t seed) {
  internal::Engine engine = internal::MakeEngine(seed, internal::Stream::kForms);
  for (int attempt = 0; attempt < kMaxFormDraws; ++attempt) {
    std::vector<LinearForm> forms(static_cast<std::size_t>(r + 1));
    for (LinearForm& form : forms) {
      for (Residue& coeff : form) {
        coeff = internal::UniformResidue(engine, field.p());
      }
    }
    FormSystem system(field, std::move(forms));
    if (system.InGeneralPosition()) return system;
  }
  throw Error(ErrorCode::kDegenerateForms,
              "no forms in general position after " +
                  std::to_string(kMaxFormDraws) + " draws over F_" +
                  std::to_string(field.p()));
}

FormSystem FormSystem::Vandermonde(Int r, const PrimeField& field) {
  std::vector<LinearForm> forms;
  for (Int l = 0; l <= r; ++l) {
    const Residue node = field.Reduce(l);
    forms.push_back({1, node, field.Mul(node, node)});
  }
  return FormSystem(field, std::move(forms));
}

FormSystem FormSystem::Coordinate(Int r, const PrimeField& field) {
  std::vector<LinearForm> forms(static_cast<std::size_t>(r + 1),
                                LinearForm{0, 0, 0});
  for (std::size_t l = 0; l < 3 && l < forms.size(); ++l) forms[l][l] = 1;
  return FormSystem(field, std::move(forms));
}

FormSystem FormSystem::FromForms(const PrimeField& field,
                                 std::vector<LinearForm> forms) {
  for (LinearForm& form : forms) {
    for (Residue& coeff : form) coeff %= field.p();
  }
  return FormSystem(field, std::move(forms));
}

bool FormSystem::InGeneralPosition() const {
  const std::size_t n = forms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (Det3(field_, forms_[i], forms_[j], forms_[l]) == 0) return false;
      }
    }
  }
  return n >= 3;
}

bool FormSystem::IsCoordinateSystem() const {
  return forms_ == Coordinate(r(), field_).forms_;
}

bool FormSystem::IsZeroForm(Int index) const {
  const LinearForm& form = forms_[static_cast<std::size_t>(index)];
  return form[0] == 0 && form[1] == 0 && form[2] == 0;
}

Residue FormSystem::Evaluate(Int index, const Point& point) const {
  const LinearForm& form = forms_[static_cast<std::size_t>(index)];
  return field_.Add(field_.Add(field_.Mul(form[0], point[0]),
                               field_.Mul(form[1], point[1])),
                    field_.Mul(form[2], point[2]));
}

BandedMatrix BandedMatrix::FromEntries(Pair pair, FormSystem forms,
                                       std::vector<BandEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const BandEntry& x, const BandEntry& y) {
              return std::tie(x.row, x.col) < std::tie(y.row, y.col);
            });
  return BandedMatrix(std::move(pair), std::move(forms), std::move(entries));
}

std::vector<Residue> BandedMatrix::EvaluateAt(const Point& point) const {
  const PrimeField& field = forms_.field();
  std::vector<Residue> values(static_cast<std::size_t>(rows() * cols()), 0);
  std::vector<Residue> form_values(forms_.forms().size());
  for (std::size_t l = 0; l < form_values.size(); ++l) {
    form_values[l] = forms_.Evaluate(static_cast<Int>(l), point);
  }
  for (const BandEntry& e : entries_) {
    values[static_cast<std::size_t>((e.row - 1) * cols() + (e.col - 1))] =
        field.Pow(form_values[static_cast<std::size_t>(e.form)], e.exponent);
  }
  return values;
}

BandedMatrix BuildBanded(const Pair& p, const FormSystem& forms,
                         BandMode mode) {
  if (forms.r() != p.r()) {
    throw Error(ErrorCode::kDegenerateForms,
                "need " + std::to_string(p.r() + 1) + " forms, got " +
                    std::to_string(forms.r() + 1));
  }
  Int band = p.r();
  if (mode == BandMode::kStrong) {
    if (!IsStronglyAdmissible(p)) {
      throw Error(ErrorCode::kNotAdmissibleForMode,
                  "strong mode needs a strongly admissible pair");
    }
    if (!forms.InGeneralPosition()) {
      throw Error(ErrorCode::kDegenerateForms,
                  "forms are not in general position");
    }
  } else {
    if (!IsWeaklyAdmissible(p)) {
      throw Error(ErrorCode::kNotAdmissibleForMode,
                  "weak mode needs a weakly admissible pair");
    }
    if (!forms.IsCoordinateSystem()) {
      throw Error(ErrorCode::kDegenerateForms,
                  "weak mode needs the forms (x0, x1, x2, 0, ..., 0)");
    }
    band = kAmbientDim;
  }

  std::vector<BandEntry> entries;
  for (Int i = 1; i <= p.r() + p.k(); ++i) {
    for (Int j = 1; j <= p.k(); ++j) {
      const Int offset = i - j;
      if (offset < 0 || offset > band) continue;
      entries.push_back({i, j, offset, p.a_at(j) - p.b_at(i)});
    }
  }
  return BandedMatrix::FromEntries(p, forms, std::move(entries));
}

bool CheckMinimality(const BandedMatrix& m) {
  if (!IsWeaklyAdmissible(m.pair())) return false;
  return std::none_of(m.entries().begin(), m.entries().end(),
                      [](const BandEntry& e) { return e.exponent == 0; });
}

DegreeTable ComputeDegreeTable(const BandedMatrix& m) {
  DegreeTable table{m.rows(), m.cols(), {}, false};
  table.cells.assign(static_cast<std::size_t>(m.rows() * m.cols()),
                     std::nullopt);
  const Pair& p = m.pair();
  for (const BandEntry& e : m.entries()) {
    const Int degree = p.a_at(e.col) - p.b_at(e.row);
    table.cells[static_cast<std::size_t>((e.row - 1) * m.cols() +
                                         (e.col - 1))] = degree;
    if (degree <= 0) table.has_nonpositive = true;
  }
  return table;
}

Int RankModP(std::vector<Residue> matrix, Int rows, Int cols,
             const PrimeField& field) {
  const auto at = [&](Int i, Int j) -> Residue& {
    return matrix[static_cast<std::size_t>(i * cols + j)];
  };
  Int rank = 0;
  for (Int col = 0; col < cols && rank < rows; ++col) {
    Int pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    for (Int j = 0; j < cols; ++j) std::swap(at(rank, j), at(pivot, j));
    const Residue inv = field.Inverse(at(rank, col));
    for (Int i = rank + 1; i < rows; ++i) {
      const Residue factor = field.Mul(at(i, col), inv);
      if (factor == 0) continue;
      for (Int j = col; j < cols; ++j) {
        at(i, j) = field.Sub(at(i, j), field.Mul(factor, at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<Point> SamplePoints(const PrimeField& field, Int count,
                                std::uint64_t seed) {
  internal::Engine engine =
      internal::MakeEngine(seed, internal::Stream::kPoints);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(std::max<Int>(count, 0)));
  while (static_cast<Int>(points.size()) < count) {
    Point pt;
    for (Residue& x : pt) x = internal::UniformResidue(engine, field.p());
    if (pt[0] == 0 && pt[1] == 0 && pt[2] == 0) continue;
    points.push_back(pt);
  }
  return points;
}

std::vector<Point> CriticalPoints(const FormSystem& forms) {
  const PrimeField& f = forms.field();
  std::vector<Point> points;
  for (Int l = 0; l <= forms.r(); ++l) {
    if (forms.IsZeroForm(l)) continue;
    for (Int m = l + 1; m <= forms.r(); ++m) {
      if (forms.IsZeroForm(m)) continue;
      const LinearForm& u = forms.forms()[static_cast<std::size_t>(l)];
      const LinearForm& v = forms.forms()[static_cast<std::size_t>(m)];
      const Point cross{f.Sub(f.Mul(u[1], v[2]), f.Mul(u[2], v[1])),
                        f.Sub(f.Mul(u[2], v[0]), f.Mul(u[0], v[2])),
                        f.Sub(f.Mul(u[0], v[1]), f.Mul(u[1], v[0]))};
      // Proportional forms meet in a line, not a point.
      if (cross[0] == 0 && cross[1] == 0 && cross[2] == 0) continue;
      points.push_back(cross);
    }
  }
  return points;
}

}  // namespace p2strata
