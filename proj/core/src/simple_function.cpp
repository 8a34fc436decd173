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

#include "condex/simple_function.hpp"

#include <algorithm>

#include "condex/error.hpp"

namespace condex {

namespace {

void require_same_algebra(const SimpleFunction& f, const SimpleFunction& g) {
  if (!same_algebra(f.algebra(), g.algebra())) {
    raise(Errc::AlgebraMismatch, "functions live on different algebras");
  }
}

}  // namespace

SimpleFunction::SimpleFunction(AlgebraPtr algebra, std::vector<Rational> values)
    : algebra_(std::move(algebra)), values_(std::move(values)) {}

SimpleFunction SimpleFunction::zero(AlgebraPtr algebra) {
  return constant(std::move(algebra), Rational(0));
}

SimpleFunction SimpleFunction::constant(AlgebraPtr algebra, Rational value) {
  std::vector<Rational> values(algebra->atom_count(), value);
  return SimpleFunction(std::move(algebra), std::move(values));
}

SimpleFunction SimpleFunction::from_values(AlgebraPtr algebra, std::vector<Rational> values) {
  if (values.size() != algebra->atom_count()) {
    raise(Errc::AlgebraMismatch, "value count does not match atom count");
  }
  return SimpleFunction(std::move(algebra), std::move(values));
}

SimpleFunction SimpleFunction::from_map(AlgebraPtr algebra,
                                        const std::map<std::string, Rational>& values) {
  for (const auto& [name, value] : values) {
    if (!algebra->has_atom(name)) raise(Errc::UnknownAtom, "no atom named '" + name + "'");
  }
  std::vector<Rational> out;
  out.reserve(algebra->atom_count());
  for (const auto& atom : algebra->atoms()) {
    auto it = values.find(atom);
    if (it == values.end()) raise(Errc::ParseError, "missing value for atom '" + atom + "'");
    out.push_back(it->second);
  }
  return SimpleFunction(std::move(algebra), std::move(out));
}

SimpleFunction SimpleFunction::indicator(const ClopenSet& set) {
  std::vector<Rational> values;
  values.reserve(set.algebra()->atom_count());
  for (std::size_t i = 0; i < set.mask().size(); ++i) {
    values.emplace_back(set.mask()[i] ? 1 : 0);
  }
  return SimpleFunction(set.algebra(), std::move(values));
}

const Rational& SimpleFunction::at(std::string_view atom) const {
  return values_[algebra_->index_of(atom)];
}

bool operator==(const SimpleFunction& a, const SimpleFunction& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.values_ == b.values_;
}

namespace {

template <typename Op>
SimpleFunction zip(const SimpleFunction& f, const SimpleFunction& g, Op op) {
  require_same_algebra(f, g);
  std::vector<Rational> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(op(f[i], g[i]));
  return SimpleFunction::from_values(f.algebra(), std::move(values));
}

}  // namespace

SimpleFunction operator+(const SimpleFunction& f, const SimpleFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

SimpleFunction operator-(const SimpleFunction& f, const SimpleFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return Rational(a - b); });
}

SimpleFunction operator-(const SimpleFunction& f) {
  std::vector<Rational> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.emplace_back(-f[i]);
  return SimpleFunction::from_values(f.algebra(), std::move(values));
}

SimpleFunction operator*(const SimpleFunction& f, const SimpleFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return Rational(a * b); });
}

SimpleFunction operator*(const Rational& scalar, const SimpleFunction& f) {
  std::vector<Rational> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.emplace_back(scalar * f[i]);
  return SimpleFunction::from_values(f.algebra(), std::move(values));
}

SimpleFunction sup(const SimpleFunction& f, const SimpleFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return std::max(a, b); });
}

SimpleFunction inf(const SimpleFunction& f, const SimpleFunction& g) {
  return zip(f, g, [](const Rational& a, const Rational& b) { return std::min(a, b); });
}

SimpleFunction abs(const SimpleFunction& f) { return sup(f, -f); }

bool pointwise_leq(const SimpleFunction& f, const SimpleFunction& g) {
  require_same_algebra(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

bool is_nonnegative(const SimpleFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) < 0) return false;
  }
  return true;
}

bool is_positive(const SimpleFunction& f) {
  bool some_positive = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) < 0) return false;
    if (sgn(f[i]) > 0) some_positive = true;
  }
  return some_positive;
}

bool is_strictly_positive(const SimpleFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) <= 0) return false;
  }
  return true;
}

ClopenSet level_set(const SimpleFunction& f, const Rational& lambda) {
  std::vector<bool> mask(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mask[i] = f[i] < lambda;
  return ClopenSet::from_mask(f.algebra(), std::move(mask));
}

SimpleFunction freudenthal_approx(const SimpleFunction& f, const Rational& eps) {
  if (sgn(eps) <= 0) {
    raise(Errc::NonpositiveEpsilon, "approximation grid step must be positive, got " +
                                        to_string(eps));
  }
  std::vector<Rational> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(grid_floor(f[i], eps));
  return SimpleFunction::from_values(f.algebra(), std::move(values));
}

std::vector<std::pair<Rational, ClopenSet>> value_partition(const SimpleFunction& f) {
  std::vector<Rational> distinct(f.values());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::pair<Rational, ClopenSet>> blocks;
  blocks.reserve(distinct.size());
  for (const auto& v : distinct) {
    std::vector<bool> mask(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mask[i] = f[i] == v;
    blocks.emplace_back(v, ClopenSet::from_mask(f.algebra(), std::move(mask)));
  }
  return blocks;
}

std::string to_string(const SimpleFunction& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ", ";
    out += f.algebra()->atoms()[i];
    out += ":";
    out += to_string(f[i]);
  }
  out += "]";
  return out;
}

}  // namespace condex
