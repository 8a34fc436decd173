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

#include "condex/rng.hpp"

namespace condex {

Rational random_rational(Rng& rng, long max_abs_num, long max_den) {
  return make_rational(rng.range(-max_abs_num, max_abs_num), rng.range(1, max_den));
}

Rational random_nonnegative_rational(Rng& rng, long max_num, long max_den) {
  return make_rational(rng.range(0, max_num), rng.range(1, max_den));
}

Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
  return make_rational(rng.range(1, max_num), rng.range(1, max_den));
}

}  // namespace condex
