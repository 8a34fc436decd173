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

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "condex/error.hpp"
#include "condex/rng.hpp"
#include "support.hpp"

namespace condex {
namespace {

using testing::letter_algebra;
using testing::random_function;
using testing::random_positive_measure;

CeOperator half_half_operator() {
  auto algebra = letter_algebra(3);
  std::vector<ClopenSet> blocks{
      ClopenSet::of(algebra, std::vector<std::string>{"a", "b"}),
      ClopenSet::singleton(algebra, "c")};
  auto measure = OrderFunctional::from_weights(
      algebra, {make_rational(1, 3), make_rational(1, 3), make_rational(1, 3)});
  return CeOperator::partition_average(std::move(blocks), std::move(measure));
}

TEST_CASE("duplicate spaces interleave primed copies and swap pairs") {
  auto base = letter_algebra(3);
  auto space = duplicate_space(base);
  CHECK(space.base == base);
  CHECK(space.doubled->atoms() ==
        std::vector<std::string>{"a", "a'", "b", "b'", "c", "c'"});
  CHECK(space.involution == std::vector<std::size_t>{1, 0, 3, 2, 5, 4});
}

TEST_CASE("duplicate averaging splits the difference across each pair") {
  auto op = CeOperator::duplicate(duplicate_space(letter_algebra(2)));
  CHECK(op.form() == CeOperator::Form::Duplicate);

  auto f = SimpleFunction::from_values(
      op.algebra(), {make_rational(1), make_rational(4), make_rational(-2), make_rational(1, 2)});
  auto tf = op.apply(f);
  // (1+4)/2 on the a-pair, (-2+1/2)/2 on the b-pair.
  CHECK(tf.values() == std::vector<Rational>{make_rational(5, 2), make_rational(5, 2),
                                             make_rational(-3, 4), make_rational(-3, 4)});
  // Averaging is idempotent.
  CHECK(op.apply(tf) == tf);
  CHECK_RAISES(Errc::AlgebraMismatch, op.apply(SimpleFunction::zero(letter_algebra(4))));
}

TEST_CASE("partition averaging reproduces the hand-computed block means") {
  auto op = half_half_operator();
  CHECK(op.form() == CeOperator::Form::PartitionAverage);

  auto f = SimpleFunction::from_values(
      op.algebra(), {make_rational(1), make_rational(3), make_rational(5)});
  // Uniform weights: the {a,b} block averages to 2, the {c} block stays 5.
  CHECK(op.apply(f).values() == std::vector<Rational>{2, 2, 5});

  // Non-uniform weights tilt the average toward the heavier atom:
  // ((1/4)*1 + (3/4)*3) / 1 = 5/2 on the first block.
  auto algebra = op.algebra();
  auto tilted = CeOperator::partition_average(
      op.blocks(), OrderFunctional::from_weights(
                       algebra, {make_rational(1, 4), make_rational(3, 4), make_rational(1)}));
  CHECK(tilted.apply(f).values() == std::vector<Rational>{make_rational(5, 2),
                                                          make_rational(5, 2), 5});
}

TEST_CASE("constructors validate the structure they average over") {
  auto base = letter_algebra(2);
  auto space = duplicate_space(base);

  // Breaking the pairing, the naming, or the base linkage is rejected.
  auto broken = space;
  broken.involution = {0, 1, 2, 3};
  CHECK_THROWS_AS(CeOperator::duplicate(broken), std::invalid_argument);
  auto renamed = space;
  renamed.doubled = BooleanAlgebra::finite({"a", "b", "a'", "b'"});
  CHECK_THROWS_AS(CeOperator::duplicate(renamed), std::invalid_argument);
  auto rebased = space;
  rebased.base = letter_algebra(3);
  CHECK_THROWS_AS(CeOperator::duplicate(rebased), std::invalid_argument);

  auto algebra = letter_algebra(3);
  auto uniform = OrderFunctional::from_weights(algebra, {1, 1, 1});
  auto ab = ClopenSet::of(algebra, std::vector<std::string>{"a", "b"});
  auto bc = ClopenSet::of(algebra, std::vector<std::string>{"b", "c"});
  auto c = ClopenSet::singleton(algebra, "c");

  // Overlapping, non-covering, empty, and dead blocks are all rejected.
  CHECK_THROWS_AS(CeOperator::partition_average({ab, bc}, uniform), std::invalid_argument);
  CHECK_THROWS_AS(CeOperator::partition_average({ab}, uniform), std::invalid_argument);
  CHECK_THROWS_AS(CeOperator::partition_average({ab, ClopenSet::empty(algebra), c}, uniform),
                  std::invalid_argument);
  CHECK_THROWS_AS(CeOperator::partition_average(
                      {ab, c}, OrderFunctional::from_map(algebra, {{"a", 1}, {"b", 1}})),
                  std::invalid_argument);
  CHECK_RAISES(Errc::AlgebraMismatch,
               CeOperator::partition_average(
                   {ab, c}, OrderFunctional::from_weights(letter_algebra(2), {1, 1})));
}

// Fixed-point oracle for the range: membership, apply-invariance, and (for
// the duplicate form) symmetry under the involution must coincide, 500
// random functions each way.
TEST_CASE("range membership coincides with being a fixed point") {
  Rng rng(kDefaultSeed + 40);
  for (int trial = 0; trial < 500; ++trial) {
    auto base = letter_algebra(1 + rng.below(8));
    auto op = CeOperator::duplicate(duplicate_space(base));
    auto f = random_function(rng, op.algebra());

    CHECK(op.range_membership(f) == (op.apply(f) == f));
    auto averaged = op.apply(f);
    CHECK(op.range_membership(averaged));

    const auto& sigma = op.space().involution;
    bool symmetric = true;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != f[sigma[i]]) symmetric = false;
    CHECK(op.range_membership(f) == symmetric);
  }

  for (int trial = 0; trial < 500; ++trial) {
    auto algebra = letter_algebra(2 + rng.below(7));
    // Round-robin blocks over a random block count make a partition.
    std::size_t block_count = 1 + rng.below(algebra->atom_count());
    std::vector<std::vector<bool>> masks(block_count,
                                         std::vector<bool>(algebra->atom_count(), false));
    for (std::size_t i = 0; i < algebra->atom_count(); ++i)
      masks[i % block_count][i] = true;
    std::vector<ClopenSet> blocks;
    for (auto& mask : masks) blocks.push_back(ClopenSet::from_mask(algebra, std::move(mask)));

    auto op = CeOperator::partition_average(std::move(blocks),
                                            random_positive_measure(rng, algebra));
    auto f = random_function(rng, algebra);
    CHECK(op.range_membership(f) == (op.apply(f) == f));
    CHECK(op.range_membership(op.apply(f)));
  }
}

TEST_CASE("range bases consist of fixed indicator functions") {
  Rng rng(kDefaultSeed + 41);
  for (std::size_t atoms = 1; atoms <= 8; ++atoms) {
    auto op = CeOperator::duplicate(duplicate_space(letter_algebra(atoms)));
    auto basis = op.range_basis();
    // One pair indicator per base atom: half the doubled atom count.
    CHECK(basis.size() == atoms);
    CHECK(basis.size() == op.algebra()->atom_count() / 2);
    auto total = SimpleFunction::zero(op.algebra());
    for (const auto& g : basis) {
      CHECK(op.apply(g) == g);
      CHECK(op.range_membership(g));
      total = total + g;
    }
    CHECK(total == SimpleFunction::constant(op.algebra(), 1));
  }

  auto op = half_half_operator();
  auto basis = op.range_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].values() == std::vector<Rational>{1, 1, 0});
  CHECK(basis[1].values() == std::vector<Rational>{0, 0, 1});
  for (const auto& g : basis) CHECK(op.apply(g) == g);
}

TEST_CASE("axiom checks pass on honest operators of every size") {
  Rng rng(kDefaultSeed + 42);
  for (std::size_t atoms = 1; atoms <= 8; ++atoms) {
    auto op = CeOperator::duplicate(duplicate_space(letter_algebra(atoms)));
    auto report = check_ce_axioms(op, 40, kDefaultSeed + atoms);
    CHECK(report.all_passed());
    REQUIRE(report.verdicts.size() == 6);
    for (const auto& verdict : report.verdicts) {
      CHECK(verdict.passed);
      CHECK(verdict.trials == 40);
      CHECK(verdict.counterexample.empty());
    }
  }
  CHECK(check_ce_axioms(half_half_operator(), 60).all_passed());
}

TEST_CASE("axiom verdicts arrive in the documented order") {
  auto report = check_ce_axioms(half_half_operator(), 5);
  std::vector<std::string> names;
  for (const auto& verdict : report.verdicts) names.push_back(verdict.axiom);
  CHECK(names == std::vector<std::string>{"positivity", "projection", "linearity",
                                          "order continuity", "unit preservation",
                                          "range closure"});
}

TEST_CASE("axiom reports are deterministic for a fixed seed") {
  auto op = CeOperator::duplicate(duplicate_space(letter_algebra(4)));
  auto first = check_ce_axioms(op, 25, 99);
  auto second = check_ce_axioms(op, 25, 99);
  REQUIRE(first.verdicts.size() == second.verdicts.size());
  for (std::size_t i = 0; i < first.verdicts.size(); ++i) {
    CHECK(first.verdicts[i].axiom == second.verdicts[i].axiom);
    CHECK(first.verdicts[i].trials == second.verdicts[i].trials);
    CHECK(first.verdicts[i].passed == second.verdicts[i].passed);
    CHECK(first.verdicts[i].counterexample == second.verdicts[i].counterexample);
  }
}

TEST_CASE("corrupting the pairing map breaks the projection verdict") {
  auto base = letter_algebra(3);
  auto space = duplicate_space(base);
  // A 6-cycle is fixed-point-free but not an involution, so averaging along
  // it is not idempotent.
  for (std::size_t i = 0; i < space.involution.size(); ++i)
    space.involution[i] = (i + 1) % space.involution.size();
  auto corrupted = CeOperator::duplicate_unchecked(std::move(space));

  auto report = check_ce_axioms(corrupted, 200, kDefaultSeed);
  CHECK_FALSE(report.all_passed());
  for (const auto& verdict : report.verdicts) {
    if (verdict.axiom != "projection") continue;
    CHECK_FALSE(verdict.passed);
    CHECK(verdict.trials < 200);
    CHECK_FALSE(verdict.counterexample.empty());
  }
}

TEST_CASE("a dead block breaks unit preservation") {
  auto algebra = letter_algebra(3);
  std::vector<ClopenSet> blocks{
      ClopenSet::singleton(algebra, "a"),
      ClopenSet::of(algebra, std::vector<std::string>{"b", "c"})};
  // All the mass sits on the first block; the second averages to zero.
  auto dead = CeOperator::partition_average_unchecked(
      std::move(blocks), OrderFunctional::from_map(algebra, {{"a", make_rational(1)}}));

  auto report = check_ce_axioms(dead, 200, kDefaultSeed);
  CHECK_FALSE(report.all_passed());
  bool unit_failed = false;
  for (const auto& verdict : report.verdicts)
    if (verdict.axiom == "unit preservation" && !verdict.passed) unit_failed = true;
  CHECK(unit_failed);
}

}  // namespace
}  // namespace condex
