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

#ifndef P2STRATA_ERROR_HPP_
#define P2STRATA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace p2strata {

enum class ErrorCode {
  // pairs
  kLengthMismatch,
  kNotSorted,
  kRankTooSmall,
  kEmptyA,
  kNonIntegralC2,
  kWrongRank,
  kNotAdmissible,
  // cohom
  kNegativeH0,
  // strata
  kNoNaturalPair,
  kBoundsTooSmall,
  kIndexModelViolation,
  kVerificationFailed,
  // resolution
  kNotAdmissibleForMode,
  kDegenerateForms,
  kRankDeficient,
  kBadModulus,
  // io
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception; `code()` is the
// stable discriminator, `what()` carries a human readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace p2strata

#endif  // P2STRATA_ERROR_HPP_
