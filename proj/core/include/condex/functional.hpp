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
#include "condex/simple_function.hpp"

namespace condex {

// A positive order continuous linear functional on C(X), held as the
// finitely additive measure it induces on atoms. At finite scale every
// positive functional is order continuous, so no continuity flag is
// stored; that equivalence is a theorem of the model, exercised by the
// stabilization checks, not an instance invariant.
class OrderFunctional {
 public:
  static OrderFunctional zero(AlgebraPtr algebra);
  /// One nonnegative weight per atom in algebra order; negative weights are
  /// rejected (std::invalid_argument), wrong length is AlgebraMismatch.
  static OrderFunctional from_weights(AlgebraPtr algebra, std::vector<Rational> weights);
  /// Atoms omitted from the map get weight 0; stray names raise UnknownAtom.
  static OrderFunctional from_map(AlgebraPtr algebra,
                                  const std::map<std::string, Rational>& weights);
  /// Point evaluation f -> f(x): weight 1 at the given atom, 0 elsewhere.
  static OrderFunctional dirac(AlgebraPtr algebra, std::string_view atom);  // UnknownAtom

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& weight_at(std::size_t index) const { return weights_[index]; }
  const Rational& weight(std::string_view atom) const;  // UnknownAtom

  /// phi(f) = sum over atoms of f(atom) * weight(atom). Linear and positive.
  Rational evaluate(const SimpleFunction& f) const;  // AlgebraMismatch
  /// phi(1_A).
  Rational measure_of(const ClopenSet& set) const;  // AlgebraMismatch
  /// phi(1_X).
  Rational total() const;

  /// Every atom weight strictly positive; equivalent at finite scale to
  /// phi(f) > 0 for all f > 0.
  bool is_strictly_positive() const;
  bool is_zero() const;

  /// True iff phi(1_A) = 0 for every clopen A. By additivity over the atom
  /// partition it suffices to check singletons, which is what this does;
  /// the equivalence with phi = 0 is the vanishing dichotomy verified in
  /// the test suites by full clopen enumeration.
  bool vanishes_on_clopens() const;

  /// Splits X into disjoint clopen K1, K2 covering X with phi(1_K1) > 0 and
  /// phi(1_K2) > 0: K1 is the singleton of the first positive-weight atom,
  /// K2 its complement. Needs at least two atoms of positive weight
  /// (NotSplittable).
  std::pair<ClopenSet, ClopenSet> positive_split() const;

  friend bool operator==(const OrderFunctional& a, const OrderFunctional& b);

 private:
  OrderFunctional(AlgebraPtr algebra, std::vector<Rational> weights);

  AlgebraPtr algebra_;
  std::vector<Rational> weights_;
};

}  // namespace condex
