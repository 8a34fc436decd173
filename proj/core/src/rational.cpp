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

#include <stdexcept>

#include "condex/error.hpp"

namespace condex {

namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  return is_digits(text);
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  // The sign may only lead the literal; denominators are bare digits.
  if (!is_integer_literal(num_part) || !is_digits(den_part)) {
    raise(Errc::ParseError, "invalid rational literal '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    raise(Errc::ParseError, "zero denominator in rational '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational grid_floor(const Rational& value, const Rational& step) {
  if (sgn(step) <= 0) throw std::invalid_argument("grid_floor: step must be positive");
  Rational scaled = value / step;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational result = step * Rational(k);
  result.canonicalize();
  return result;
}

bool on_grid(const Rational& value, const Rational& step) {
  if (sgn(step) <= 0) throw std::invalid_argument("on_grid: step must be positive");
  Rational scaled = value / step;
  return scaled.get_den() == 1;
}

}  // namespace condex
