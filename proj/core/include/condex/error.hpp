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

#include <stdexcept>
#include <string>
#include <string_view>

namespace condex {

/// Failure kinds surfaced by the library. The CLI maps ParseError,
/// FileNotFound and every domain kind to exit 2 and VerificationFailure
/// to exit 1.
enum class Errc {
  DuplicateAtom,
  EmptyAtomList,
  AlgebraMismatch,
  UnknownAtom,
  NonpositiveEpsilon,
  NotSplittable,
  RatioOutOfRange,
  DepthZero,
  BranchTooLong,
  TruncationExceedsBranch,
  ParseError,
  FileNotFound,
  VerificationFailure,
};

std::string_view errc_name(Errc kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& detail);
  Errc kind() const noexcept { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] void raise(Errc kind, const std::string& detail);

}  // namespace condex
