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

#include "condex/functional.hpp"

#include <stdexcept>

#include "condex/error.hpp"

namespace condex {

OrderFunctional::OrderFunctional(AlgebraPtr algebra, std::vector<Rational> weights)
    : algebra_(std::move(algebra)), weights_(std::move(weights)) {}

OrderFunctional OrderFunctional::zero(AlgebraPtr algebra) {
  std::vector<Rational> weights(algebra->atom_count(), Rational(0));
  return OrderFunctional(std::move(algebra), std::move(weights));
}

OrderFunctional OrderFunctional::from_weights(AlgebraPtr algebra,
                                              std::vector<Rational> weights) {
  if (weights.size() != algebra->atom_count()) {
    raise(Errc::AlgebraMismatch, "expected " + std::to_string(algebra->atom_count()) +
                                     " weights, got " + std::to_string(weights.size()));
  }
  for (const Rational& w : weights) {
    if (w < 0) {
      throw std::invalid_argument("functional weights must be nonnegative, got " +
                                  to_string(w));
    }
  }
  return OrderFunctional(std::move(algebra), std::move(weights));
}

OrderFunctional OrderFunctional::from_map(AlgebraPtr algebra,
                                          const std::map<std::string, Rational>& weights) {
  std::vector<Rational> dense(algebra->atom_count(), Rational(0));
  for (const auto& [atom, w] : weights) {
    dense[algebra->index_of(atom)] = w;
  }
  return from_weights(std::move(algebra), std::move(dense));
}

OrderFunctional OrderFunctional::dirac(AlgebraPtr algebra, std::string_view atom) {
  std::vector<Rational> weights(algebra->atom_count(), Rational(0));
  weights[algebra->index_of(atom)] = Rational(1);
  return OrderFunctional(std::move(algebra), std::move(weights));
}

const Rational& OrderFunctional::weight(std::string_view atom) const {
  return weights_[algebra_->index_of(atom)];
}

Rational OrderFunctional::evaluate(const SimpleFunction& f) const {
  if (!same_algebra(algebra_, f.algebra())) {
    raise(Errc::AlgebraMismatch, "functional and function live on different algebras");
  }
  Rational sum(0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    sum += f[i] * weights_[i];
  }
  return sum;
}

Rational OrderFunctional::measure_of(const ClopenSet& set) const {
  if (!same_algebra(algebra_, set.algebra())) {
    raise(Errc::AlgebraMismatch, "functional and clopen set live on different algebras");
  }
  Rational sum(0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (set.contains_index(i)) sum += weights_[i];
  }
  return sum;
}

Rational OrderFunctional::total() const {
  Rational sum(0);
  for (const Rational& w : weights_) sum += w;
  return sum;
}

bool OrderFunctional::is_strictly_positive() const {
  for (const Rational& w : weights_) {
    if (w <= 0) return false;
  }
  return true;
}

bool OrderFunctional::is_zero() const {
  for (const Rational& w : weights_) {
    if (w != 0) return false;
  }
  return true;
}

bool OrderFunctional::vanishes_on_clopens() const {
  // Additivity over atoms reduces "all clopens" to "all singletons".
  return is_zero();
}

std::pair<ClopenSet, ClopenSet> OrderFunctional::positive_split() const {
  std::size_t positive_count = 0;
  std::size_t first_positive = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] > 0) {
      if (positive_count == 0) first_positive = i;
      ++positive_count;
    }
  }
  if (positive_count < 2) {
    raise(Errc::NotSplittable,
          "need at least two atoms of positive weight, found " +
              std::to_string(positive_count));
  }
  ClopenSet k1 = ClopenSet::singleton(algebra_, algebra_->atoms()[first_positive]);
  ClopenSet k2 = k1.complement();
  return {std::move(k1), std::move(k2)};
}

bool operator==(const OrderFunctional& a, const OrderFunctional& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.weights_ == b.weights_;
}

}  // namespace condex
