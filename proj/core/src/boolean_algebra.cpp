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

#include "condex/boolean_algebra.hpp"

#include <algorithm>

#include "condex/error.hpp"

namespace condex {

BooleanAlgebra::BooleanAlgebra(Kind kind, int depth, std::vector<std::string> atoms)
    : kind_(kind), depth_(depth), atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    index_.emplace(atoms_[i], i);
  }
}

AlgebraPtr BooleanAlgebra::finite(std::vector<std::string> atom_names) {
  if (atom_names.empty()) raise(Errc::EmptyAtomList, "an algebra needs at least one atom");
  std::map<std::string_view, std::size_t> seen;
  for (const auto& name : atom_names) {
    if (!seen.emplace(name, 0).second) {
      raise(Errc::DuplicateAtom, "atom '" + name + "' listed more than once");
    }
  }
  return AlgebraPtr(new BooleanAlgebra(Kind::Finite, -1, std::move(atom_names)));
}

AlgebraPtr BooleanAlgebra::dyadic(int depth) {
  if (depth < 0) {
    raise(Errc::DepthZero, "dyadic depth must be nonnegative, got " + std::to_string(depth));
  }
  const std::size_t count = std::size_t{1} << depth;
  std::vector<std::string> atoms;
  atoms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string bits(static_cast<std::size_t>(depth), '0');
    for (int b = 0; b < depth; ++b) {
      if ((i >> (depth - 1 - b)) & 1u) bits[static_cast<std::size_t>(b)] = '1';
    }
    atoms.push_back(std::move(bits));
  }
  return AlgebraPtr(new BooleanAlgebra(Kind::Dyadic, depth, std::move(atoms)));
}

bool BooleanAlgebra::has_atom(std::string_view name) const noexcept {
  return index_.find(name) != index_.end();
}

std::size_t BooleanAlgebra::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) raise(Errc::UnknownAtom, "no atom named '" + std::string(name) + "'");
  return it->second;
}

bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b) {
  return a.kind_ == b.kind_ && a.depth_ == b.depth_ && a.atoms_ == b.atoms_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same_algebra(const ClopenSet& a, const ClopenSet& b) {
  if (!same_algebra(a.algebra(), b.algebra())) {
    raise(Errc::AlgebraMismatch, "clopen sets live on different algebras");
  }
}

}  // namespace

ClopenSet::ClopenSet(AlgebraPtr algebra, std::vector<bool> mask)
    : algebra_(std::move(algebra)), mask_(std::move(mask)) {}

ClopenSet ClopenSet::empty(AlgebraPtr algebra) {
  std::vector<bool> mask(algebra->atom_count(), false);
  return ClopenSet(std::move(algebra), std::move(mask));
}

ClopenSet ClopenSet::full(AlgebraPtr algebra) {
  std::vector<bool> mask(algebra->atom_count(), true);
  return ClopenSet(std::move(algebra), std::move(mask));
}

ClopenSet ClopenSet::singleton(AlgebraPtr algebra, std::string_view atom) {
  std::vector<bool> mask(algebra->atom_count(), false);
  mask[algebra->index_of(atom)] = true;
  return ClopenSet(std::move(algebra), std::move(mask));
}

ClopenSet ClopenSet::of(AlgebraPtr algebra, std::span<const std::string> members) {
  std::vector<bool> mask(algebra->atom_count(), false);
  for (const auto& name : members) {
    mask[algebra->index_of(name)] = true;
  }
  return ClopenSet(std::move(algebra), std::move(mask));
}

ClopenSet ClopenSet::from_mask(AlgebraPtr algebra, std::vector<bool> mask) {
  if (mask.size() != algebra->atom_count()) {
    raise(Errc::AlgebraMismatch, "mask length does not match atom count");
  }
  return ClopenSet(std::move(algebra), std::move(mask));
}

std::size_t ClopenSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

bool ClopenSet::is_empty() const noexcept {
  return std::none_of(mask_.begin(), mask_.end(), [](bool m) { return m; });
}

bool ClopenSet::is_full() const noexcept {
  return std::all_of(mask_.begin(), mask_.end(), [](bool m) { return m; });
}

bool ClopenSet::contains(std::string_view atom) const { return mask_[algebra_->index_of(atom)]; }

std::vector<std::string> ClopenSet::member_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) names.push_back(algebra_->atoms()[i]);
  }
  return names;
}

ClopenSet ClopenSet::meet(const ClopenSet& other) const {
  require_same_algebra(*this, other);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] && other.mask_[i];
  return ClopenSet(algebra_, std::move(mask));
}

ClopenSet ClopenSet::join(const ClopenSet& other) const {
  require_same_algebra(*this, other);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] || other.mask_[i];
  return ClopenSet(algebra_, std::move(mask));
}

ClopenSet ClopenSet::complement() const {
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
  return ClopenSet(algebra_, std::move(mask));
}

ClopenSet ClopenSet::difference(const ClopenSet& other) const {
  require_same_algebra(*this, other);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] && !other.mask_[i];
  return ClopenSet(algebra_, std::move(mask));
}

bool ClopenSet::subset_of(const ClopenSet& other) const {
  require_same_algebra(*this, other);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

bool ClopenSet::intersects(const ClopenSet& other) const {
  require_same_algebra(*this, other);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && other.mask_[i]) return true;
  }
  return false;
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.mask_ == b.mask_;
}

std::string to_string(const ClopenSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : set.member_names()) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  out += "}";
  return out;
}

namespace {

// Distinct members of a named subset, as a mask; validates names.
std::vector<bool> subset_mask(const AlgebraPtr& algebra, std::span<const std::string> subset) {
  std::vector<bool> mask(algebra->atom_count(), false);
  for (const auto& name : subset) mask[algebra->index_of(name)] = true;
  return mask;
}

std::size_t mask_size(const std::vector<bool>& mask) {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

}  // namespace

bool is_connected(const AlgebraPtr& algebra, std::span<const std::string> subset) {
  return mask_size(subset_mask(algebra, subset)) <= 1;
}

bool is_connected(const ClopenSet& subset) { return subset.size() <= 1; }

std::optional<ClopenSet> separation_witness(const AlgebraPtr& algebra,
                                            std::span<const std::string> subset) {
  return separation_witness(ClopenSet::from_mask(algebra, subset_mask(algebra, subset)));
}

std::optional<ClopenSet> separation_witness(const ClopenSet& subset) {
  if (subset.size() <= 1) return std::nullopt;
  const auto& mask = subset.mask();
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) {
      return ClopenSet::singleton(subset.algebra(), subset.algebra()->atoms()[i]);
    }
  }
  return std::nullopt;  // unreachable: size() > 1 implies a set bit
}

}  // namespace condex
