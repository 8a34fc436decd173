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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace condex {

// Exact rational scalar. Always held in canonical form: lowest terms,
// positive denominator. No floating point anywhere in the core.
using Rational = mpq_class;

/// num/den in canonical form; den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading '-'); rejects everything else,
/// including zero denominators, with ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Largest multiple of step that is <= value. step must be positive.
Rational grid_floor(const Rational& value, const Rational& step);

/// True iff value is an integer multiple of step.
bool on_grid(const Rational& value, const Rational& step);

}  // namespace condex
