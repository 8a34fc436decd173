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

#include "condex/witness.hpp"

#include <stdexcept>

#include "condex/error.hpp"

namespace condex {

namespace {

bool is_bitstring(std::string_view s) {
  for (char c : s) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

/// Measure on every depth-level atom, walked level by level in atom order.
std::vector<Rational> leaf_measures(int depth, const DyadicTower& tower) {
  std::vector<Rational> level{Rational(1)};
  std::string node;
  for (int k = 0; k < depth; ++k) {
    std::vector<Rational> next;
    next.reserve(level.size() * 2);
    for (std::size_t i = 0; i < level.size(); ++i) {
      node.clear();
      for (int b = k - 1; b >= 0; --b) node.push_back((i >> b) & 1 ? '1' : '0');
      Rational r = tower.ratio(node);
      next.emplace_back(r * level[i]);
      next.emplace_back((1 - r) * level[i]);
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

DyadicTower::DyadicTower(int depth, bool uniform, std::map<std::string, Rational> ratios)
    : depth_(depth),
      uniform_(uniform),
      ratios_(std::move(ratios)),
      algebra_(BooleanAlgebra::dyadic(depth)),
      measure_(OrderFunctional::zero(algebra_)) {
  measure_ = OrderFunctional::from_weights(algebra_, leaf_measures(depth_, *this));
}

DyadicTower DyadicTower::uniform(int depth) {
  if (depth < 1) {
    raise(Errc::DepthZero, "tower depth must be >= 1, got " + std::to_string(depth));
  }
  return DyadicTower(depth, true, {});
}

DyadicTower DyadicTower::from_ratios(int depth, std::map<std::string, Rational> ratios) {
  if (depth < 1) {
    raise(Errc::DepthZero, "tower depth must be >= 1, got " + std::to_string(depth));
  }
  for (const auto& [node, r] : ratios) {
    if (!is_bitstring(node) || node.size() >= static_cast<std::size_t>(depth)) {
      throw std::invalid_argument("ratio key \"" + node +
                                  "\" is not a bitstring of length < depth");
    }
    if (r <= 0 || r >= 1) {
      raise(Errc::RatioOutOfRange,
            "ratio at node \"" + node + "\" is " + to_string(r) + ", must lie in (0,1)");
    }
  }
  return DyadicTower(depth, false, std::move(ratios));
}

Rational DyadicTower::ratio(std::string_view node) const {
  if (!is_bitstring(node) || node.size() >= static_cast<std::size_t>(depth_)) {
    throw std::invalid_argument("node \"" + std::string(node) +
                                "\" is not a bitstring of length < depth");
  }
  auto it = ratios_.find(std::string(node));
  return it == ratios_.end() ? Rational(1, 2) : it->second;
}

Rational DyadicTower::node_measure(std::string_view node) const {
  if (!is_bitstring(node) || node.size() > static_cast<std::size_t>(depth_)) {
    throw std::invalid_argument("node \"" + std::string(node) +
                                "\" is not a bitstring of length <= depth");
  }
  Rational mu(1);
  for (std::size_t k = 0; k < node.size(); ++k) {
    Rational r = ratio(node.substr(0, k));
    mu *= node[k] == '0' ? r : Rational(1 - r);
  }
  return mu;
}

ClopenSet DyadicTower::node_set(std::string_view node) const {
  if (!is_bitstring(node) || node.size() > static_cast<std::size_t>(depth_)) {
    throw std::invalid_argument("node \"" + std::string(node) +
                                "\" is not a bitstring of length <= depth");
  }
  std::vector<bool> mask(algebra_->atom_count(), false);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask[i] = algebra_->atoms()[i].compare(0, node.size(), node) == 0;
  }
  return ClopenSet::from_mask(algebra_, std::move(mask));
}

bool operator==(const DyadicTower& a, const DyadicTower& b) {
  return a.depth_ == b.depth_ && a.uniform_ == b.uniform_ && a.ratios_ == b.ratios_;
}

BranchChain BranchChain::of(std::vector<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("branch bits must be 0 or 1, got " + std::to_string(b));
    }
  }
  return BranchChain(std::move(bits));
}

BranchChain BranchChain::parse(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      raise(Errc::ParseError, "branch \"" + std::string(text) + "\" has non-bit characters");
    }
    bits.push_back(c - '0');
  }
  return BranchChain(std::move(bits));
}

std::string BranchChain::prefix(std::size_t k) const {
  std::string node;
  node.reserve(k);
  for (std::size_t i = 0; i < k && i < bits_.size(); ++i) {
    node.push_back(bits_[i] ? '1' : '0');
  }
  return node;
}

namespace {

void require_branch_fits(const DyadicTower& tower, const BranchChain& branch) {
  if (branch.length() > static_cast<std::size_t>(tower.depth())) {
    raise(Errc::BranchTooLong, "branch length " + std::to_string(branch.length()) +
                                   " exceeds tower depth " + std::to_string(tower.depth()));
  }
}

void require_truncation_fits(const BranchChain& branch, int n) {
  if (n < 1) {
    throw std::invalid_argument("truncation index must be >= 1, got " + std::to_string(n));
  }
  if (static_cast<std::size_t>(n) > branch.length()) {
    raise(Errc::TruncationExceedsBranch,
          "truncation " + std::to_string(n) + " exceeds branch length " +
              std::to_string(branch.length()));
  }
}

}  // namespace

std::vector<Rational> alphas(const DyadicTower& tower, const BranchChain& branch) {
  require_branch_fits(tower, branch);
  std::vector<Rational> out;
  out.reserve(branch.length() + 1);
  for (std::size_t k = 0; k <= branch.length(); ++k) {
    out.push_back(tower.node_measure(branch.prefix(k)));
  }
  return out;
}

std::vector<ClopenSet> branch_sets(const DyadicTower& tower, const BranchChain& branch) {
  require_branch_fits(tower, branch);
  std::vector<ClopenSet> out;
  out.reserve(branch.length() + 1);
  for (std::size_t k = 0; k <= branch.length(); ++k) {
    out.push_back(tower.node_set(branch.prefix(k)));
  }
  return out;
}

SimpleFunction divergence_function(const DyadicTower& tower, const BranchChain& branch,
                                   int n) {
  require_branch_fits(tower, branch);
  require_truncation_fits(branch, n);
  SimpleFunction f = SimpleFunction::zero(tower.algebra());
  for (int k = 1; k <= n; ++k) {
    Rational alpha_k = tower.node_measure(branch.prefix(static_cast<std::size_t>(k)));
    Rational scale = Rational(k) / alpha_k;
    f = sup(f, scale * SimpleFunction::indicator(
                           tower.node_set(branch.prefix(static_cast<std::size_t>(k)))));
  }
  return f;
}

std::vector<std::pair<int, Rational>> verify_divergence(const DyadicTower& tower,
                                                        const BranchChain& branch,
                                                        int upto) {
  require_branch_fits(tower, branch);
  require_truncation_fits(branch, upto);
  std::vector<std::pair<int, Rational>> table;
  table.reserve(static_cast<std::size_t>(upto));
  for (int n = 1; n <= upto; ++n) {
    table.emplace_back(n, tower.measure().evaluate(divergence_function(tower, branch, n)));
  }
  return table;
}

SimpleFunction embed_dyadic(const SimpleFunction& f, int target_depth) {
  const AlgebraPtr& algebra = f.algebra();
  if (algebra->kind() != BooleanAlgebra::Kind::Dyadic) {
    throw std::invalid_argument("embedding is defined for dyadic algebras only");
  }
  const int depth = algebra->dyadic_depth();
  if (target_depth < depth) {
    throw std::invalid_argument("target depth " + std::to_string(target_depth) +
                                " is shallower than the function's depth " +
                                std::to_string(depth));
  }
  const int extra = target_depth - depth;
  AlgebraPtr deeper = BooleanAlgebra::dyadic(target_depth);
  std::vector<Rational> values;
  values.reserve(deeper->atom_count());
  for (std::size_t i = 0; i < deeper->atom_count(); ++i) {
    values.push_back(f[i >> extra]);
  }
  return SimpleFunction::from_values(std::move(deeper), std::move(values));
}

}  // namespace condex
