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

#include <doctest.h>

#include <cstddef>
#include <string>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/error.hpp"
#include "condex/functional.hpp"
#include "condex/rational.hpp"
#include "condex/rng.hpp"
#include "condex/simple_function.hpp"

// Checks that evaluating `expr` raises a condex::Error of the given kind.
#define CHECK_RAISES(errc, expr)                                   \
  do {                                                             \
    bool raised_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const condex::Error& caught_) {                       \
      raised_ = true;                                              \
      CHECK(caught_.kind() == (errc));                             \
    }                                                              \
    CHECK_MESSAGE(raised_, "expected " #errc " from: " #expr);     \
  } while (0)

namespace condex::testing {

/// Algebra on the first n letters "a", "b", ... (n <= 26).
inline AlgebraPtr letter_algebra(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
  return BooleanAlgebra::finite(std::move(atoms));
}

inline SimpleFunction random_function(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < algebra->atom_count(); ++i)
    values.push_back(random_rational(rng, 9, 9));
  return SimpleFunction::from_values(algebra, std::move(values));
}

inline SimpleFunction random_nonnegative_function(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < algebra->atom_count(); ++i)
    values.push_back(random_nonnegative_rational(rng, 9, 9));
  return SimpleFunction::from_values(algebra, std::move(values));
}

inline OrderFunctional random_positive_measure(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < algebra->atom_count(); ++i)
    weights.push_back(random_positive_rational(rng, 9, 9));
  return OrderFunctional::from_weights(algebra, std::move(weights));
}

inline ClopenSet clopen_from_bits(const AlgebraPtr& algebra, unsigned long bits) {
  std::vector<bool> mask(algebra->atom_count());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = ((bits >> i) & 1u) != 0;
  return ClopenSet::from_mask(algebra, std::move(mask));
}

inline ClopenSet random_clopen(Rng& rng, const AlgebraPtr& algebra) {
  return clopen_from_bits(algebra, rng.below(1ul << algebra->atom_count()));
}

/// All 2^n clopen subsets, in mask order. Only for small algebras.
inline std::vector<ClopenSet> all_clopens(const AlgebraPtr& algebra) {
  std::vector<ClopenSet> out;
  for (unsigned long bits = 0; bits < (1ul << algebra->atom_count()); ++bits)
    out.push_back(clopen_from_bits(algebra, bits));
  return out;
}

}  // namespace condex::testing
