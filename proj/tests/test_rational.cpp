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

#include "condex/rational.hpp"

#include <doctest.h>

#include "condex/error.hpp"
#include "condex/rng.hpp"
#include "support.hpp"

namespace condex {
namespace {

TEST_CASE("make_rational canonicalizes sign and common factors") {
  CHECK(make_rational(6, 4) == make_rational(3, 2));
  CHECK(make_rational(-6, 4) == make_rational(-3, 2));
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(make_rational(-6, -4) == make_rational(3, 2));
  CHECK(make_rational(0, 7) == make_rational(0));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
}

TEST_CASE("to_string drops unit denominators") {
  CHECK(to_string(make_rational(5)) == "5");
  CHECK(to_string(make_rational(-12, 4)) == "-3");
  CHECK(to_string(make_rational(0)) == "0");
  CHECK(to_string(make_rational(22, 7)) == "22/7");
}

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == make_rational(3));
  CHECK(parse_rational("-3") == make_rational(-3));
  CHECK(parse_rational("1/2") == make_rational(1, 2));
  CHECK(parse_rational("-7/4") == make_rational(-7, 4));
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK(parse_rational("0") == make_rational(0));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_RAISES(Errc::ParseError, parse_rational(""));
  CHECK_RAISES(Errc::ParseError, parse_rational("1/0"));
  CHECK_RAISES(Errc::ParseError, parse_rational("1.5"));
  CHECK_RAISES(Errc::ParseError, parse_rational("1/2/3"));
  CHECK_RAISES(Errc::ParseError, parse_rational("a"));
  CHECK_RAISES(Errc::ParseError, parse_rational("1/"));
  CHECK_RAISES(Errc::ParseError, parse_rational("/2"));
  CHECK_RAISES(Errc::ParseError, parse_rational(" 1"));
  CHECK_RAISES(Errc::ParseError, parse_rational("1 "));
  CHECK_RAISES(Errc::ParseError, parse_rational("+1"));
  CHECK_RAISES(Errc::ParseError, parse_rational("1/-2"));
}

TEST_CASE("parse and to_string are mutually inverse on random values") {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    Rational value = random_rational(rng, 1000, 1000);
    CHECK(parse_rational(to_string(value)) == value);
  }
}

TEST_CASE("grid_floor returns the greatest grid multiple below") {
  CHECK(grid_floor(make_rational(7, 3), make_rational(1, 2)) == make_rational(2));
  CHECK(grid_floor(make_rational(-7, 3), make_rational(1, 2)) == make_rational(-5, 2));
  CHECK(grid_floor(make_rational(3, 2), make_rational(1, 2)) == make_rational(3, 2));
  CHECK(grid_floor(make_rational(0), make_rational(5, 7)) == make_rational(0));
}

TEST_CASE("grid_floor brackets every random value within one step") {
  Rng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    Rational value = random_rational(rng, 50, 20);
    Rational step = random_positive_rational(rng, 9, 9);
    Rational floored = grid_floor(value, step);
    CHECK(floored <= value);
    CHECK(value - floored < step);
    CHECK(on_grid(floored, step));
  }
}

TEST_CASE("on_grid detects exact multiples only") {
  CHECK(on_grid(make_rational(3, 2), make_rational(1, 2)));
  CHECK(on_grid(make_rational(-3, 2), make_rational(1, 2)));
  CHECK(on_grid(make_rational(0), make_rational(1, 3)));
  CHECK_FALSE(on_grid(make_rational(1, 3), make_rational(1, 2)));
  CHECK_FALSE(on_grid(make_rational(5, 6), make_rational(1, 4)));
}

TEST_CASE("random rational generators respect their ranges") {
  Rng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK(random_nonnegative_rational(rng, 9, 9) >= 0);
    CHECK(random_positive_rational(rng, 9, 9) > 0);
    Rational value = random_rational(rng, 9, 9);
    CHECK(abs(value.get_num()) <= 9);
    CHECK(value.get_den() <= 9);
  }
}

}  // namespace
}  // namespace condex
