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
#include <string>
#include <vector>

#include "condex/rng.hpp"

namespace condex {

struct SuiteResult {
  std::string name;
  /// Individual assertions evaluated by the suite.
  long checks = 0;
  long failures = 0;
  /// First failing assertion, described; empty when the suite passed.
  std::string detail;

  bool passed() const noexcept { return failures == 0; }
};

/// Runs every library invariant suite at its full documented size: lattice
/// and Riesz laws, separation and vanishing dichotomies, split and
/// stabilization properties, the six operator axioms with mutation
/// sensitivity, tower coherence and divergence growth, and text-format
/// round trips. Deterministic for a fixed seed; suite order is fixed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed = kDefaultSeed);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace condex
