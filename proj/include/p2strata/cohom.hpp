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

#ifndef P2STRATA_COHOM_HPP_
#define P2STRATA_COHOM_HPP_

#include <vector>

#include "p2strata/pairs.hpp"

namespace p2strata {

/// h^0(O(d)) on P^2.
Int H0Line(Int d);

/// h^2(O(t)) on P^2, i.e. h^0(O(-t-3)) by Serre duality.
Int H2Line(Int t);

/// First difference A(t + u) - A(t) of A = H2Line.
Int Diff1(Int u, Int t);

/// Second difference (D_v D_u A)(t) = (D_u A)(t + v) - (D_u A)(t).
Int Diff2(Int v, Int u, Int t);

/// chi(E(t)) for any E presented by `p`; additive over the resolution.
Int EulerChar(const Pair& p, Int t);

struct CohomologyRow {
  Int t = 0;
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;
  Int chi = 0;

  friend bool operator==(const CohomologyRow&, const CohomologyRow&) = default;
};

// h0 is exact for every bundle with the given pair. h1 and h2 assume the
// connecting map H^2(F1(t)) -> H^2(F0(t)) has maximal rank; `generic` is set
// when the pair is not natural, i.e. when that assumption is a model rather
// than a property of the general bundle.
struct CohomologyTable {
  Pair pair;
  bool generic = true;
  std::vector<CohomologyRow> rows;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// Materializes rows for t in [t_min, t_max]; empty when t_min > t_max.
/// Throws kNegativeH0 if the pair predicts a negative h^0.
CohomologyTable GeneralCohomologyTable(const Pair& p, Int t_min, Int t_max);

/// The single row at twist t.
CohomologyRow GeneralCohomologyRow(const Pair& p, Int t);

}  // namespace p2strata

#endif  // P2STRATA_COHOM_HPP_
