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

#include "condex/cond_expectation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "condex/error.hpp"

namespace condex {

DuplicateSpace duplicate_space(const AlgebraPtr& base) {
  std::vector<std::string> doubled_names;
  doubled_names.reserve(2 * base->atom_count());
  for (const std::string& name : base->atoms()) {
    doubled_names.push_back(name);
    doubled_names.push_back(name + "'");
  }
  std::vector<std::size_t> involution(doubled_names.size());
  for (std::size_t k = 0; k < base->atom_count(); ++k) {
    involution[2 * k] = 2 * k + 1;
    involution[2 * k + 1] = 2 * k;
  }
  return DuplicateSpace{base, BooleanAlgebra::finite(std::move(doubled_names)),
                        std::move(involution)};
}

bool AxiomReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.passed; });
}

CeOperator::CeOperator(DuplicateSpace space)
    : algebra_(space.doubled), data_(std::move(space)) {}

CeOperator::CeOperator(std::vector<ClopenSet> blocks, OrderFunctional measure)
    : algebra_(measure.algebra()) {
  PartitionData data{std::move(blocks), std::move(measure), {}};
  data.block_measures.reserve(data.blocks.size());
  for (const ClopenSet& block : data.blocks) {
    data.block_measures.push_back(data.measure.measure_of(block));
  }
  data_ = std::move(data);
}

CeOperator CeOperator::duplicate(DuplicateSpace space) {
  if (!space.base || !space.doubled) {
    throw std::invalid_argument("duplicate space is missing an algebra");
  }
  const std::size_t n = space.base->atom_count();
  if (space.doubled->atom_count() != 2 * n) {
    throw std::invalid_argument("doubled algebra must have twice the base atom count");
  }
  if (space.involution.size() != 2 * n) {
    throw std::invalid_argument("involution must cover every doubled atom");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& base_name = space.base->atoms()[k];
    if (space.doubled->atoms()[2 * k] != base_name ||
        space.doubled->atoms()[2 * k + 1] != base_name + "'") {
      throw std::invalid_argument("doubled atoms must interleave base atoms with primed copies");
    }
    if (space.involution[2 * k] != 2 * k + 1 || space.involution[2 * k + 1] != 2 * k) {
      throw std::invalid_argument("involution must swap each atom with its primed copy");
    }
  }
  return CeOperator(std::move(space));
}

CeOperator CeOperator::duplicate_unchecked(DuplicateSpace space) {
  return CeOperator(std::move(space));
}

CeOperator CeOperator::partition_average(std::vector<ClopenSet> blocks,
                                         OrderFunctional measure) {
  if (blocks.empty()) {
    throw std::invalid_argument("partition must have at least one block");
  }
  const AlgebraPtr& algebra = measure.algebra();
  std::vector<bool> covered(algebra->atom_count(), false);
  for (const ClopenSet& block : blocks) {
    if (!same_algebra(block.algebra(), algebra)) {
      raise(Errc::AlgebraMismatch, "partition block and measure live on different algebras");
    }
    if (block.is_empty()) {
      throw std::invalid_argument("partition blocks must be non-empty");
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (!block.contains_index(i)) continue;
      if (covered[i]) {
        throw std::invalid_argument("partition blocks overlap at atom " +
                                    algebra->atoms()[i]);
      }
      covered[i] = true;
    }
    if (measure.measure_of(block) <= 0) {
      throw std::invalid_argument("partition block " + to_string(block) +
                                  " has measure zero");
    }
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) {
      throw std::invalid_argument("partition misses atom " + algebra->atoms()[i]);
    }
  }
  return CeOperator(std::move(blocks), std::move(measure));
}

CeOperator CeOperator::partition_average_unchecked(std::vector<ClopenSet> blocks,
                                                   OrderFunctional measure) {
  return CeOperator(std::move(blocks), std::move(measure));
}

CeOperator::Form CeOperator::form() const noexcept {
  return std::holds_alternative<DuplicateSpace>(data_) ? Form::Duplicate
                                                       : Form::PartitionAverage;
}

const DuplicateSpace& CeOperator::space() const {
  return std::get<DuplicateSpace>(data_);
}

const std::vector<ClopenSet>& CeOperator::blocks() const {
  return std::get<PartitionData>(data_).blocks;
}

const OrderFunctional& CeOperator::measure() const {
  return std::get<PartitionData>(data_).measure;
}

SimpleFunction CeOperator::apply(const SimpleFunction& f) const {
  if (!same_algebra(algebra_, f.algebra())) {
    raise(Errc::AlgebraMismatch, "function lives on a different algebra than the operator");
  }
  if (const auto* dup = std::get_if<DuplicateSpace>(&data_)) {
    std::vector<Rational> values;
    values.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      values.emplace_back((f[i] + f[dup->involution[i]]) / 2);
    }
    return SimpleFunction::from_values(algebra_, std::move(values));
  }
  const auto& part = std::get<PartitionData>(data_);
  std::vector<Rational> values(f.size(), Rational(0));
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const ClopenSet& block = part.blocks[b];
    Rational numerator(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (block.contains_index(i)) numerator += f[i] * part.measure.weight_at(i);
    }
    // A zero-measure block (reachable only through the unchecked factory)
    // averages to 0 instead of dividing by zero.
    Rational average =
        part.block_measures[b] == 0 ? Rational(0) : Rational(numerator / part.block_measures[b]);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (block.contains_index(i)) values[i] = average;
    }
  }
  return SimpleFunction::from_values(algebra_, std::move(values));
}

bool CeOperator::range_membership(const SimpleFunction& g) const {
  if (!same_algebra(algebra_, g.algebra())) {
    raise(Errc::AlgebraMismatch, "function lives on a different algebra than the operator");
  }
  if (const auto* dup = std::get_if<DuplicateSpace>(&data_)) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != g[dup->involution[i]]) return false;
    }
    return true;
  }
  const auto& part = std::get<PartitionData>(data_);
  for (const ClopenSet& block : part.blocks) {
    const Rational* first = nullptr;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!block.contains_index(i)) continue;
      if (first == nullptr) {
        first = &g[i];
      } else if (g[i] != *first) {
        return false;
      }
    }
  }
  return true;
}

std::vector<SimpleFunction> CeOperator::range_basis() const {
  std::vector<SimpleFunction> basis;
  if (const auto* dup = std::get_if<DuplicateSpace>(&data_)) {
    std::vector<bool> seen(algebra_->atom_count(), false);
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) continue;
      std::vector<bool> mask(seen.size(), false);
      mask[i] = true;
      mask[dup->involution[i]] = true;
      seen[i] = true;
      seen[dup->involution[i]] = true;
      basis.push_back(SimpleFunction::indicator(ClopenSet::from_mask(algebra_, std::move(mask))));
    }
    return basis;
  }
  const auto& part = std::get<PartitionData>(data_);
  basis.reserve(part.blocks.size());
  for (const ClopenSet& block : part.blocks) {
    basis.push_back(SimpleFunction::indicator(block));
  }
  return basis;
}

namespace {

SimpleFunction random_function(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> values;
  values.reserve(algebra->atom_count());
  for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
    values.push_back(random_rational(rng, 8, 4));
  }
  return SimpleFunction::from_values(algebra, std::move(values));
}

SimpleFunction random_nonnegative_function(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> values;
  values.reserve(algebra->atom_count());
  for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
    values.push_back(random_nonnegative_rational(rng, 8, 4));
  }
  return SimpleFunction::from_values(algebra, std::move(values));
}

SimpleFunction random_weak_unit(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> values;
  values.reserve(algebra->atom_count());
  for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
    values.push_back(random_positive_rational(rng, 8, 4));
  }
  return SimpleFunction::from_values(algebra, std::move(values));
}

template <typename TrialFn>
AxiomVerdict run_axiom(std::string axiom, int trials, TrialFn&& trial) {
  AxiomVerdict verdict;
  verdict.axiom = std::move(axiom);
  for (int t = 0; t < trials; ++t) {
    std::string counterexample = trial(t);
    ++verdict.trials;
    if (!counterexample.empty()) {
      verdict.passed = false;
      verdict.counterexample = std::move(counterexample);
      return verdict;
    }
  }
  verdict.passed = true;
  return verdict;
}

std::string trial_tag(int t) { return "trial " + std::to_string(t) + ": "; }

}  // namespace

AxiomReport check_ce_axioms(const CeOperator& op, int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("axiom check needs at least one trial");
  }
  const AlgebraPtr& algebra = op.algebra();
  AxiomReport report;

  {
    Rng rng(seed);
    report.verdicts.push_back(run_axiom("positivity", trials, [&](int t) -> std::string {
      SimpleFunction f = random_nonnegative_function(rng, algebra);
      SimpleFunction tf = op.apply(f);
      if (is_nonnegative(tf)) return {};
      return trial_tag(t) + "f = " + to_string(f) + " >= 0 but Tf = " + to_string(tf) +
             " has a negative value";
    }));
  }

  {
    Rng rng(seed + 1);
    report.verdicts.push_back(run_axiom("projection", trials, [&](int t) -> std::string {
      SimpleFunction f = random_function(rng, algebra);
      SimpleFunction tf = op.apply(f);
      SimpleFunction ttf = op.apply(tf);
      if (ttf == tf) return {};
      return trial_tag(t) + "f = " + to_string(f) + ": T(Tf) = " + to_string(ttf) +
             " differs from Tf = " + to_string(tf);
    }));
  }

  {
    Rng rng(seed + 2);
    report.verdicts.push_back(run_axiom("linearity", trials, [&](int t) -> std::string {
      SimpleFunction f = random_function(rng, algebra);
      SimpleFunction g = random_function(rng, algebra);
      Rational alpha = random_rational(rng, 4, 3);
      Rational beta = random_rational(rng, 4, 3);
      SimpleFunction lhs = op.apply(alpha * f + beta * g);
      SimpleFunction rhs = alpha * op.apply(f) + beta * op.apply(g);
      if (lhs == rhs) return {};
      return trial_tag(t) + "f = " + to_string(f) + ", g = " + to_string(g) +
             ", alpha = " + to_string(alpha) + ", beta = " + to_string(beta) +
             ": T(alpha f + beta g) = " + to_string(lhs) +
             " differs from alpha Tf + beta Tg = " + to_string(rhs);
    }));
  }

  {
    Rng rng(seed + 3);
    // Finite restatement of order continuity: T commutes with the sup of an
    // increasing chain. Chains here are kept short; longer chains add no
    // power because the sup of an increasing chain is its last element.
    const std::size_t chain_length = std::max<std::size_t>(
        2, std::min<std::size_t>(algebra->atom_count(), 4));
    report.verdicts.push_back(run_axiom("order continuity", trials, [&](int t) -> std::string {
      std::vector<SimpleFunction> chain;
      chain.reserve(chain_length);
      chain.push_back(random_function(rng, algebra));
      for (std::size_t j = 1; j < chain_length; ++j) {
        chain.push_back(chain.back() + random_nonnegative_function(rng, algebra));
      }
      SimpleFunction top = chain.front();
      for (std::size_t j = 1; j < chain.size(); ++j) top = sup(top, chain[j]);
      SimpleFunction lhs = op.apply(top);
      SimpleFunction rhs = op.apply(chain.front());
      for (std::size_t j = 1; j < chain.size(); ++j) rhs = sup(rhs, op.apply(chain[j]));
      if (lhs == rhs) return {};
      return trial_tag(t) + "chain top = " + to_string(top) +
             ": T(sup chain) = " + to_string(lhs) +
             " differs from sup of T(chain) = " + to_string(rhs);
    }));
  }

  {
    Rng rng(seed + 4);
    report.verdicts.push_back(run_axiom("unit preservation", trials, [&](int t) -> std::string {
      SimpleFunction e = random_weak_unit(rng, algebra);
      SimpleFunction te = op.apply(e);
      if (is_strictly_positive(te)) return {};
      return trial_tag(t) + "e = " + to_string(e) + " is a weak order unit but Te = " +
             to_string(te) + " is not";
    }));
  }

  {
    Rng rng(seed + 5);
    report.verdicts.push_back(run_axiom("range closure", trials, [&](int t) -> std::string {
      SimpleFunction g1 = op.apply(random_function(rng, algebra));
      SimpleFunction g2 = op.apply(random_function(rng, algebra));
      SimpleFunction upper = sup(g1, g2);
      SimpleFunction lower = inf(g1, g2);
      if (op.apply(upper) == upper && op.apply(lower) == lower) return {};
      return trial_tag(t) + "g1 = " + to_string(g1) + ", g2 = " + to_string(g2) +
             ": sup or inf escapes the range";
    }));
  }

  return report;
}

}  // namespace condex
