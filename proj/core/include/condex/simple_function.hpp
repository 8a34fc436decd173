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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/rational.hpp"

namespace condex {

// An element of C(X) over a finite Stone space: a total map atom -> exact
// rational. Functions are immutable values; every operation is pointwise
// over the shared atom order, so equality is syntactic.
class SimpleFunction {
 public:
  static SimpleFunction zero(AlgebraPtr algebra);
  static SimpleFunction constant(AlgebraPtr algebra, Rational value);
  /// One value per atom, in algebra atom order (AlgebraMismatch on length).
  static SimpleFunction from_values(AlgebraPtr algebra, std::vector<Rational> values);
  /// Every atom must appear exactly once; stray names raise UnknownAtom,
  /// missing atoms ParseError.
  static SimpleFunction from_map(AlgebraPtr algebra, const std::map<std::string, Rational>& values);
  /// 1 on the members of the set, 0 elsewhere. indicator(full) is the
  /// standing weak order unit.
  static SimpleFunction indicator(const ClopenSet& set);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t index) const { return values_[index]; }
  const Rational& at(std::string_view atom) const;  // UnknownAtom

  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b);

 private:
  SimpleFunction(AlgebraPtr algebra, std::vector<Rational> values);

  AlgebraPtr algebra_;
  std::vector<Rational> values_;
};

// Riesz-space operations, all pointwise; operands must share an algebra
// (AlgebraMismatch).
SimpleFunction operator+(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction operator-(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction operator-(const SimpleFunction& f);
SimpleFunction operator*(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction operator*(const Rational& scalar, const SimpleFunction& f);
SimpleFunction sup(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction inf(const SimpleFunction& f, const SimpleFunction& g);
SimpleFunction abs(const SimpleFunction& f);

/// f <= g atom by atom.
bool pointwise_leq(const SimpleFunction& f, const SimpleFunction& g);
/// f >= 0.
bool is_nonnegative(const SimpleFunction& f);
/// f > 0 in the order sense: nonnegative and nonzero.
bool is_positive(const SimpleFunction& f);
/// All values strictly positive; at finite scale this is exactly being a
/// weak order unit.
bool is_strictly_positive(const SimpleFunction& f);

/// The level set {x : f(x) < lambda}. Already clopen at finite scale, so
/// taking its closure is the identity.
ClopenSet level_set(const SimpleFunction& f, const Rational& lambda);

/// Greatest function with values on the grid {k*eps} lying below f:
/// s(x) = eps*floor(f(x)/eps). Pointwise error is in [0, eps). eps must be
/// positive (NonpositiveEpsilon).
SimpleFunction freudenthal_approx(const SimpleFunction& f, const Rational& eps);

/// The canonical partition view: distinct values in ascending order, each
/// with the clopen set of atoms attaining it. The sets are disjoint and
/// cover the space.
std::vector<std::pair<Rational, ClopenSet>> value_partition(const SimpleFunction& f);

/// Compact text like "[a:1/2, b:-3]" in atom order.
std::string to_string(const SimpleFunction& f);

}  // namespace condex
