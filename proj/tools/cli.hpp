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

#include <iosfwd>
#include <string>
#include <vector>

namespace condex::cli {

// The command-line front end as a callable library, so tests can drive it
// in-process and pin its output byte for byte.
//
// Verbs: algebra, fn, ce-apply, ce-check, split, witness, selftest.
// Exit codes: 0 success and all checks passing; 1 a verification ran and
// failed (counterexample printed); 2 unusable input (bad flags, malformed
// files, violated preconditions).
//
// args is argv without the program name, in natural order.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace condex::cli
