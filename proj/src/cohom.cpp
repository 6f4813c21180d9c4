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

#include "p2strata/cohom.hpp"

#include <algorithm>
#include <string>

#include "p2strata/strata.hpp"

namespace p2strata {

Int H0Line(Int d) { return d >= 0 ? (d + 1) * (d + 2) / 2 : 0; }

Int H2Line(Int t) { return H0Line(-t - 3); }

Int Diff1(Int u, Int t) { return H2Line(t + u) - H2Line(t); }

Int Diff2(Int v, Int u, Int t) { return Diff1(u, t + v) - Diff1(u, t); }

namespace {

// chi(O(d)) = (d+1)(d+2)/2 holds for every d, including negative ones.
Int LineChi(Int d) { return (d + 1) * (d + 2) / 2; }

}  // namespace

Int EulerChar(const Pair& p, Int t) {
  Int chi = 0;
  for (Int b : p.b()) chi += LineChi(t - b);
  for (Int a : p.a()) chi -= LineChi(t - a);
  return chi;
}

CohomologyRow GeneralCohomologyRow(const Pair& p, Int t) {
  Int h0 = 0;
  Int h2_f0 = 0;
  Int h2_f1 = 0;
  for (Int b : p.b()) {
    h0 += H0Line(t - b);
    h2_f0 += H2Line(t - b);
  }
  for (Int a : p.a()) {
    h0 -= H0Line(t - a);
    h2_f1 += H2Line(t - a);
  }
  if (h0 < 0) {
    throw Error(ErrorCode::kNegativeH0,
                "h0 = " + std::to_string(h0) + " at t = " + std::to_string(t));
  }
  CohomologyRow row;
  row.t = t;
  row.h0 = h0;
  row.h1 = std::max<Int>(0, h2_f1 - h2_f0);
  row.h2 = std::max<Int>(0, h2_f0 - h2_f1);
  row.chi = EulerChar(p, t);
  return row;
}

CohomologyTable GeneralCohomologyTable(const Pair& p, Int t_min, Int t_max) {
  CohomologyTable table{p, !IsNatural(p), {}};
  for (Int t = t_min; t <= t_max; ++t) {
    table.rows.push_back(GeneralCohomologyRow(p, t));
  }
  return table;
}

}  // namespace p2strata
