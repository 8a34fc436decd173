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

#include <string>
#include <string_view>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/cond_expectation.hpp"
#include "condex/functional.hpp"
#include "condex/simple_function.hpp"
#include "condex/witness.hpp"

// Text formats for every value the CLI exchanges, all single-line JSON with
// rationals as exact lowest-terms "p/q" strings:
//
//   algebra   {"kind":"finite","atoms":["a","b"]} | {"kind":"dyadic","depth":3}
//   function  {"algebra":<algebra>,"values":{"a":"1/2",...}}   every atom present
//   measure   {"algebra":<algebra>,"weights":{"a":"2",...}}    omitted atoms weigh 0
//   operator  {"form":"duplicate","base":<algebra>}
//           | {"form":"partition","blocks":[["a","b"],["c"]],"measure":<measure>}
//   tower     {"depth":3,"ratios":"uniform"} | {"depth":3,"ratios":{"":"1/3",...}}
//
// Writers are canonical: keys in the order shown, object members in algebra
// atom order, compact separators, one trailing newline. Anything a writer
// produces re-parses to an equal value and re-writes byte-identically.
// Parsers are strict: unknown keys, wrong JSON types, malformed rationals,
// and missing required fields raise ParseError; unknown atom names raise
// UnknownAtom; structural violations surface from the constructors.
namespace condex::io {

std::string write_algebra(const AlgebraPtr& algebra);
AlgebraPtr parse_algebra(std::string_view text);  // ParseError

std::string write_function(const SimpleFunction& f);
SimpleFunction parse_function(std::string_view text);  // ParseError, UnknownAtom
/// Accepts either one function object or a JSON array of them, so operand
/// files can carry every input of a fold in one place.
std::vector<SimpleFunction> parse_function_list(std::string_view text);

std::string write_measure(const OrderFunctional& phi);
OrderFunctional parse_measure(std::string_view text);  // ParseError, UnknownAtom

std::string write_operator(const CeOperator& op);
CeOperator parse_operator(std::string_view text);  // ParseError, UnknownAtom

std::string write_tower(const DyadicTower& tower);
DyadicTower parse_tower(std::string_view text);  // ParseError, RatioOutOfRange, DepthZero

/// Whole-file read; missing or unreadable path raises FileNotFound.
std::string load_text(const std::string& path);
void save_text(const std::string& path, std::string_view content);

}  // namespace condex::io
