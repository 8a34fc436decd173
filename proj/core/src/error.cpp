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

#include "condex/error.hpp"

namespace condex {

std::string_view errc_name(Errc kind) noexcept {
  switch (kind) {
    case Errc::DuplicateAtom: return "DuplicateAtom";
    case Errc::EmptyAtomList: return "EmptyAtomList";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::UnknownAtom: return "UnknownAtom";
    case Errc::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case Errc::NotSplittable: return "NotSplittable";
    case Errc::RatioOutOfRange: return "RatioOutOfRange";
    case Errc::DepthZero: return "DepthZero";
    case Errc::BranchTooLong: return "BranchTooLong";
    case Errc::TruncationExceedsBranch: return "TruncationExceedsBranch";
    case Errc::ParseError: return "ParseError";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::VerificationFailure: return "VerificationFailure";
  }
  return "UnknownError";
}

Error::Error(Errc kind, const std::string& detail)
    : std::runtime_error(std::string(errc_name(kind)) + ": " + detail), kind_(kind) {}

void raise(Errc kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace condex
