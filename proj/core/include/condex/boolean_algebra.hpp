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

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace condex {

class BooleanAlgebra;

/// Algebras are immutable and shared by every value built over them.
using AlgebraPtr = std::shared_ptr<const BooleanAlgebra>;

// A finite Boolean algebra presented by its ordered list of named atoms.
// The atom set is the Stone space of the algebra: a finite discrete space
// whose clopen subsets are exactly the subsets of atoms. Dyadic algebras
// name their atoms by the 2^depth bitstrings of the given length, in
// numeric order.
class BooleanAlgebra {
 public:
  enum class Kind { Finite, Dyadic };

  /// Atoms must be non-empty and pairwise distinct (EmptyAtomList,
  /// DuplicateAtom). Atom order is authoritative and preserved.
  static AlgebraPtr finite(std::vector<std::string> atom_names);

  /// Algebra on all bitstrings of length depth; depth must be >= 0
  /// (DepthZero). Depth 0 yields the one-point space with atom "".
  static AlgebraPtr dyadic(int depth);

  Kind kind() const noexcept { return kind_; }
  int dyadic_depth() const noexcept { return depth_; }  // -1 for Finite kind
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  bool has_atom(std::string_view name) const noexcept;
  std::size_t index_of(std::string_view name) const;  // UnknownAtom

  /// Structural equality: same kind, same atoms in the same order.
  friend bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b);

 private:
  BooleanAlgebra(Kind kind, int depth, std::vector<std::string> atoms);

  Kind kind_;
  int depth_;
  std::vector<std::string> atoms_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Pointer equality fast path, structural equality otherwise.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// A clopen subset of the Stone space, kept as a membership mask over the
// owning algebra's atoms.
class ClopenSet {
 public:
  static ClopenSet empty(AlgebraPtr algebra);
  static ClopenSet full(AlgebraPtr algebra);
  static ClopenSet singleton(AlgebraPtr algebra, std::string_view atom);  // UnknownAtom
  /// Duplicate member names collapse; unknown names raise UnknownAtom.
  static ClopenSet of(AlgebraPtr algebra, std::span<const std::string> members);
  static ClopenSet from_mask(AlgebraPtr algebra, std::vector<bool> mask);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool is_empty() const noexcept;
  bool is_full() const noexcept;
  bool contains(std::string_view atom) const;  // UnknownAtom
  bool contains_index(std::size_t index) const { return mask_[index]; }
  std::vector<std::string> member_names() const;

  // Lattice operations; both operands must share an algebra (AlgebraMismatch).
  ClopenSet meet(const ClopenSet& other) const;
  ClopenSet join(const ClopenSet& other) const;
  ClopenSet complement() const;
  ClopenSet difference(const ClopenSet& other) const;
  bool subset_of(const ClopenSet& other) const;
  bool intersects(const ClopenSet& other) const;

  friend bool operator==(const ClopenSet& a, const ClopenSet& b);

 private:
  ClopenSet(AlgebraPtr algebra, std::vector<bool> mask);

  AlgebraPtr algebra_;
  std::vector<bool> mask_;
};

/// Comma-joined member list in braces, e.g. "{a,c}".
std::string to_string(const ClopenSet& set);

// Connectivity at finite Stone scale. Every singleton is clopen, so a
// subset is connected iff it has at most one point; the empty set counts
// as connected by convention.
bool is_connected(const AlgebraPtr& algebra, std::span<const std::string> subset);
bool is_connected(const ClopenSet& subset);

// For a disconnected subset A, a clopen C with A meet C nonempty and A not
// contained in C: the singleton of A's first atom in algebra order. Absent
// when A is connected.
std::optional<ClopenSet> separation_witness(const AlgebraPtr& algebra,
                                            std::span<const std::string> subset);
std::optional<ClopenSet> separation_witness(const ClopenSet& subset);

}  // namespace condex
