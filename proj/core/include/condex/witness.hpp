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
#include <string_view>
#include <utility>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/functional.hpp"
#include "condex/rational.hpp"
#include "condex/simple_function.hpp"

namespace condex {

// A dyadic refinement tower: repeated two-way splits of the space, each
// split weighted by a ratio strictly between 0 and 1, so the induced
// measure is strictly positive and sums to 1 across every level. Nodes are
// bitstrings; the root is the empty string; w0 and w1 are the children of
// w with mu(w0) = ratio(w) * mu(w) and mu(w1) = (1 - ratio(w)) * mu(w).
class DyadicTower {
 public:
  /// Every split ratio 1/2, so mu(w) = 2^(-|w|). depth must be >= 1
  /// (DepthZero).
  static DyadicTower uniform(int depth);
  /// Explicit ratios per node (bitstring of length < depth); nodes left out
  /// fall back to 1/2. Ratios outside (0,1) raise RatioOutOfRange, keys
  /// that are not in-range bitstrings std::invalid_argument.
  static DyadicTower from_ratios(int depth, std::map<std::string, Rational> ratios);

  int depth() const noexcept { return depth_; }
  bool is_uniform() const noexcept { return uniform_; }
  /// Explicit ratio entries only; defaulted nodes are absent.
  const std::map<std::string, Rational>& ratio_entries() const noexcept { return ratios_; }

  /// The algebra of depth-level atoms (bitstrings of length == depth).
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  /// The induced strictly positive measure on depth-level atoms, total 1.
  const OrderFunctional& measure() const noexcept { return measure_; }

  /// Split ratio at a node of length < depth.
  Rational ratio(std::string_view node) const;
  /// mu at any node of length <= depth: product of ratio/co-ratio choices
  /// along the path from the root.
  Rational node_measure(std::string_view node) const;
  /// Depth-level atoms extending the node, as a clopen set.
  ClopenSet node_set(std::string_view node) const;

  friend bool operator==(const DyadicTower& a, const DyadicTower& b);

 private:
  DyadicTower(int depth, bool uniform, std::map<std::string, Rational> ratios);

  int depth_;
  bool uniform_;
  std::map<std::string, Rational> ratios_;
  AlgebraPtr algebra_;
  OrderFunctional measure_;
};

// A descending chain of clopen sets chosen by successive split sides:
// K_k = all depth-level atoms extending the first k bits. Bits are 0/1.
class BranchChain {
 public:
  static BranchChain of(std::vector<int> bits);       // non-bit entries rejected
  static BranchChain parse(std::string_view bits);    // e.g. "0110"; ParseError

  const std::vector<int>& bits() const noexcept { return bits_; }
  std::size_t length() const noexcept { return bits_.size(); }
  /// First k bits as a node bitstring; prefix(0) is the root.
  std::string prefix(std::size_t k) const;

 private:
  explicit BranchChain(std::vector<int> bits) : bits_(std::move(bits)) {}

  std::vector<int> bits_;
};

/// alpha_k = mu(K_k) for k = 0..length (alpha_0 = 1): strictly positive and
/// strictly decreasing. Branch longer than the tower depth raises
/// BranchTooLong.
std::vector<Rational> alphas(const DyadicTower& tower, const BranchChain& branch);

/// K_0 (the whole space) through K_length as clopen sets on the depth-level
/// algebra. BranchTooLong as above.
std::vector<ClopenSet> branch_sets(const DyadicTower& tower, const BranchChain& branch);

/// The truncated divergence function f_n = sup over k = 1..n of
/// (k/alpha_k) * 1_{K_k}, realized on the depth-level algebra. Requires
/// 1 <= n <= branch length (TruncationExceedsBranch) and branch length <=
/// depth (BranchTooLong). The scaling makes phi(f_n) >= n while each term
/// alone integrates to k.
SimpleFunction divergence_function(const DyadicTower& tower, const BranchChain& branch,
                                   int n);

/// (n, phi(f_n)) for n = 1..upto, phi the tower measure: a strictly
/// increasing sequence with phi(f_n) >= n, growing past every bound as the
/// tower deepens. Same preconditions as divergence_function.
std::vector<std::pair<int, Rational>> verify_divergence(const DyadicTower& tower,
                                                        const BranchChain& branch,
                                                        int upto);

/// Re-expresses a function on the depth-d dyadic algebra at a deeper level
/// by copying each atom value to both children, repeatedly. Used to state
/// that truncation results do not depend on the realization depth.
SimpleFunction embed_dyadic(const SimpleFunction& f, int target_depth);

}  // namespace condex
