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

#ifndef P2STRATA_SRC_RNG_INTERNAL_HPP_
#define P2STRATA_SRC_RNG_INTERNAL_HPP_

#include <cstdint>
#include <limits>
#include <random>

namespace p2strata::internal {

using Engine = std::mt19937_64;

// Independent streams derived from one user seed.
enum class Stream : std::uint32_t { kForms = 1, kPoints = 2 };

inline Engine MakeEngine(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Engine(seq);
}

// Uniform on [0, modulus) by rejection; std::uniform_int_distribution is not
// reproducible across standard libraries.
inline std::uint64_t UniformResidue(Engine& engine, std::uint64_t modulus) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % modulus;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return x % modulus;
}

}  // namespace p2strata::internal

#endif  // P2STRATA_SRC_RNG_INTERNAL_HPP_
