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
#include <variant>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/functional.hpp"
#include "condex/rng.hpp"
#include "condex/simple_function.hpp"

namespace condex {

// The duplicate of a space: two disjoint copies of the base glued by the
// pairing x <-> x'. Doubled atoms interleave base atoms with their primed
// copies ({a, a', b, b', ...}) and the involution swaps each pair.
struct DuplicateSpace {
  AlgebraPtr base;
  AlgebraPtr doubled;
  /// Index form of the pairing on doubled atoms: involution[i] = sigma(i).
  std::vector<std::size_t> involution;
};

/// Builds the duplicate of `base` with primed-atom naming (append "'").
DuplicateSpace duplicate_space(const AlgebraPtr& base);

struct AxiomVerdict {
  std::string axiom;
  /// Trials actually run; a failing verdict stops at its first witness.
  int trials = 0;
  bool passed = false;
  /// Human-readable first counterexample; empty when passed.
  std::string counterexample;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;
  bool all_passed() const;
};

// A conditional expectation operator: a positive projection fixing the
// constants whose range is a Riesz subspace. Two concrete forms are
// supported: averaging over the duplicate pairing, and averaging over a
// clopen partition against a measure. Instances are immutable; apply and
// every check are pure.
class CeOperator {
 public:
  enum class Form { Duplicate, PartitionAverage };

  /// (Tf)(x) = (f(x) + f(sigma x)) / 2. Validates that the space carries a
  /// fixed-point-free involution pairing each atom with its primed copy
  /// (std::invalid_argument otherwise).
  static CeOperator duplicate(DuplicateSpace space);
  /// Tf = sum over blocks P of (phi(f * 1_P) / phi(1_P)) * 1_P. Blocks must
  /// be non-empty, pairwise disjoint, cover all atoms, and each must have
  /// strictly positive measure (std::invalid_argument; AlgebraMismatch when
  /// blocks and measure disagree on the algebra).
  static CeOperator partition_average(std::vector<ClopenSet> blocks,
                                      OrderFunctional measure);

  /// Skips every structural check. Exists so the axiom checker can be fed
  /// deliberately broken operators; never use outside tests.
  static CeOperator duplicate_unchecked(DuplicateSpace space);
  /// Same escape hatch for the partition form. A block of measure zero
  /// averages to 0 on that block rather than dividing by zero.
  static CeOperator partition_average_unchecked(std::vector<ClopenSet> blocks,
                                                OrderFunctional measure);

  Form form() const noexcept;
  /// The algebra functions must live on: the doubled algebra for the
  /// duplicate form, the partition's algebra otherwise.
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const DuplicateSpace& space() const;           // duplicate form only
  const std::vector<ClopenSet>& blocks() const;  // partition form only
  const OrderFunctional& measure() const;        // partition form only

  SimpleFunction apply(const SimpleFunction& f) const;  // AlgebraMismatch

  /// True iff g lies in the range: g(x) = g(sigma x) at every atom for the
  /// duplicate form, g constant on each block for the partition form.
  /// Coincides with apply(g) == g.
  bool range_membership(const SimpleFunction& g) const;  // AlgebraMismatch

  /// Indicator basis of the range: one pair indicator 1_{{x,x'}} per base
  /// atom for the duplicate form, one block indicator per block otherwise.
  std::vector<SimpleFunction> range_basis() const;

 private:
  struct PartitionData {
    std::vector<ClopenSet> blocks;
    OrderFunctional measure;
    /// phi(1_P) per block, cached because apply divides by it.
    std::vector<Rational> block_measures;
  };

  explicit CeOperator(DuplicateSpace space);
  CeOperator(std::vector<ClopenSet> blocks, OrderFunctional measure);

  AlgebraPtr algebra_;
  std::variant<DuplicateSpace, PartitionData> data_;
};

/// Runs the six defining-property checks, `trials` randomized rounds each,
/// with exact rational equality throughout: positivity, projection,
/// linearity, order continuity (finite form: commuting with sups of
/// increasing chains), unit preservation, and closure of the range under
/// sup and inf. Verdict order is fixed. trials must be >= 1.
AxiomReport check_ce_axioms(const CeOperator& op, int trials,
                            std::uint64_t seed = kDefaultSeed);

}  // namespace condex
