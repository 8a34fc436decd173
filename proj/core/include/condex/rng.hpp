//  Copyright 2026 The Condex Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "condex/rational.hpp"

namespace condex {

/// Seed used by every randomized check when none is given, so default runs
/// are reproducible end to end.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Deterministic generator for randomized checks. Value derivation avoids
// distribution objects so a seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, n); n must be >= 1.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 gen_;
};

/// Numerator in [-max_abs_num, max_abs_num], denominator in [1, max_den].
Rational random_rational(Rng& rng, long max_abs_num, long max_den);

/// Numerator in [0, max_num].
Rational random_nonnegative_rational(Rng& rng, long max_num, long max_den);

/// Numerator in [1, max_num].
Rational random_positive_rational(Rng& rng, long max_num, long max_den);

}  // namespace condex
