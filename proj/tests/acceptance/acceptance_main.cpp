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

// Release gate: eight end-to-end criteria, one line of output each. Every
// expected value is either frozen here as a literal or recomputed by a
// brute-force oracle that shares no code path with the library feature it
// checks. A criterion can also fail on time; the bounded ones print their
// budget next to the measured wall clock.

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/cond_expectation.hpp"
#include "condex/functional.hpp"
#include "condex/io.hpp"
#include "condex/rational.hpp"
#include "condex/rng.hpp"
#include "condex/selftest.hpp"
#include "condex/simple_function.hpp"
#include "condex/witness.hpp"

namespace condex {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string what) {
    if (passed) detail = std::move(what);
    passed = false;
  }
};

AlgebraPtr letter_algebra(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
  return BooleanAlgebra::finite(std::move(atoms));
}

SimpleFunction random_function(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < algebra->atom_count(); ++i)
    values.push_back(random_rational(rng, 9, 9));
  return SimpleFunction::from_values(algebra, std::move(values));
}

// Criterion 1: six exact-equality axiom verdicts on the pair-averaging
// operator, over 200 random bases of 1 to 8 atoms, 1000 trials per axiom.
Outcome criterion_axiom_suite() {
  Outcome outcome;
  Rng rng(kDefaultSeed);
  for (int instance = 0; instance < 200; ++instance) {
    auto base = letter_algebra(1 + rng.below(8));
    auto op = CeOperator::duplicate(duplicate_space(base));
    AxiomReport report = check_ce_axioms(op, 1000, rng.next());
    if (report.verdicts.size() != 6) {
      outcome.fail("instance " + std::to_string(instance) + ": expected 6 verdicts, got " +
                   std::to_string(report.verdicts.size()));
    }
    for (const AxiomVerdict& v : report.verdicts) {
      if (v.passed) continue;
      outcome.fail("instance " + std::to_string(instance) + " (" +
                   std::to_string(base->atom_count()) + " base atoms): axiom \"" + v.axiom +
                   "\" failed: " + v.counterexample);
    }
  }
  return outcome;
}

// Criterion 2: membership in the range, being a fixed point of apply, and
// symmetry under the pairing are one property. Exhausted over the 3^4
// functions with values in {-1, 0, 2} on a 4-atom doubled space, then on
// 500 random instances (and their averaged images) of up to 16 atoms.
Outcome criterion_range_characterization() {
  Outcome outcome;
  auto check_instance = [&outcome](const CeOperator& op, const SimpleFunction& g,
                                   const char* label) {
    bool member = op.range_membership(g);
    bool fixed = op.apply(g) == g;
    bool symmetric = true;
    const auto& sigma = op.space().involution;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != g[sigma[i]]) symmetric = false;
    if (member != fixed || fixed != symmetric) {
      outcome.fail(std::string(label) + " g = " + to_string(g) + ": membership " +
                   (member ? "yes" : "no") + ", fixed point " + (fixed ? "yes" : "no") +
                   ", symmetric " + (symmetric ? "yes" : "no"));
    }
  };

  auto two = letter_algebra(2);
  auto op = CeOperator::duplicate(duplicate_space(two));
  const std::vector<Rational> grid{make_rational(-1), make_rational(0), make_rational(2)};
  std::vector<std::size_t> odometer(4, 0);
  for (bool carry = false; !carry;) {
    std::vector<Rational> values;
    for (std::size_t digit : odometer) values.push_back(grid[digit]);
    check_instance(op, SimpleFunction::from_values(op.algebra(), std::move(values)),
                   "grid");
    carry = true;
    for (std::size_t d = 0; d < odometer.size() && carry; ++d) {
      odometer[d] = (odometer[d] + 1) % grid.size();
      carry = odometer[d] == 0;
    }
  }

  Rng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto larger = CeOperator::duplicate(duplicate_space(letter_algebra(1 + rng.below(8))));
    auto f = random_function(rng, larger.algebra());
    check_instance(larger, f, "random");
    check_instance(larger, larger.apply(f), "averaged");
  }
  return outcome;
}

// Criterion 3: a nonnegative functional vanishes on every clopen indicator
// exactly when it is zero. Exhausted over all weight vectors drawn from
// {0, 1/3, 1} on 1 to 4 atoms, with every one of the 2^n clopens summed by
// hand as the oracle.
Outcome criterion_vanishing_dichotomy() {
  Outcome outcome;
  const std::vector<Rational> grid{make_rational(0), make_rational(1, 3), make_rational(1)};
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    auto algebra = letter_algebra(atoms);
    std::vector<std::size_t> odometer(atoms, 0);
    for (bool carry = false; !carry;) {
      std::vector<Rational> weights;
      for (std::size_t digit : odometer) weights.push_back(grid[digit]);
      auto phi = OrderFunctional::from_weights(algebra, weights);

      bool oracle_vanishes = true;
      for (unsigned long bits = 0; bits < (1ul << atoms); ++bits) {
        Rational mass(0);
        for (std::size_t i = 0; i < atoms; ++i)
          if ((bits >> i) & 1u) mass += weights[i];
        std::vector<bool> mask(atoms);
        for (std::size_t i = 0; i < atoms; ++i) mask[i] = ((bits >> i) & 1u) != 0;
        if (phi.measure_of(ClopenSet::from_mask(algebra, std::move(mask))) != mass) {
          outcome.fail("clopen mass mismatch on " + std::to_string(atoms) + " atoms");
        }
        if (mass != 0) oracle_vanishes = false;
      }

      bool weights_zero = true;
      for (const Rational& w : weights)
        if (w != 0) weights_zero = false;
      if (phi.vanishes_on_clopens() != oracle_vanishes || oracle_vanishes != weights_zero ||
          phi.is_zero() != weights_zero) {
        outcome.fail("dichotomy mismatch on " + std::to_string(atoms) + " atoms");
      }

      carry = true;
      for (std::size_t d = 0; d < odometer.size() && carry; ++d) {
        odometer[d] = (odometer[d] + 1) % grid.size();
        carry = odometer[d] == 0;
      }
    }
  }
  return outcome;
}

// Criterion 4: 1000 random strictly positive measures on 2 to 16 atoms
// split into disjoint covering clopens, both of positive mass, with the two
// masses summing exactly to the value of the constant one.
Outcome criterion_positive_split() {
  Outcome outcome;
  Rng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 1000; ++trial) {
    auto algebra = letter_algebra(2 + rng.below(15));
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i)
      weights.push_back(random_positive_rational(rng, 9, 9));
    auto phi = OrderFunctional::from_weights(algebra, std::move(weights));

    auto [k1, k2] = phi.positive_split();
    Rational m1 = phi.measure_of(k1);
    Rational m2 = phi.measure_of(k2);
    bool disjoint = k1.meet(k2).is_empty();
    bool covering = k1.join(k2).is_full();
    bool additive =
        Rational(m1 + m2) == phi.evaluate(SimpleFunction::constant(algebra, make_rational(1)));
    if (!disjoint || !covering || m1 <= 0 || m2 <= 0 || !additive) {
      outcome.fail("trial " + std::to_string(trial) + ": split " + to_string(k1) + " / " +
                   to_string(k2) + " with masses " + to_string(m1) + ", " + to_string(m2));
    }
  }
  return outcome;
}

// Criterion 5: the divergence table. On the uniform depth-12 tower along
// the all-zeros branch the integrals must equal the frozen atom-sum table
// below; on 100 random towers of depth up to 10 every integral must reach n.
Outcome criterion_divergence() {
  Outcome outcome;
  // Frozen before the build by summing k * 2^k over the level partition of
  // the uniform tower: the n-th integral is n(n-1)/4 + n.
  const std::vector<Rational> frozen{
      make_rational(1),      make_rational(5, 2),  make_rational(9, 2),
      make_rational(7),      make_rational(10),    make_rational(27, 2),
      make_rational(35, 2),  make_rational(22),    make_rational(27),
      make_rational(65, 2),  make_rational(77, 2), make_rational(45)};

  auto tower = DyadicTower::uniform(12);
  auto branch = BranchChain::parse("000000000000");
  auto rows = verify_divergence(tower, branch, 12);
  if (rows.size() != frozen.size()) {
    outcome.fail("expected 12 rows, got " + std::to_string(rows.size()));
    return outcome;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != static_cast<int>(i + 1) || rows[i].second != frozen[i]) {
      outcome.fail("row " + std::to_string(i + 1) + ": got (" +
                   std::to_string(rows[i].first) + ", " + to_string(rows[i].second) +
                   "), frozen value " + to_string(frozen[i]));
    }
  }

  Rng rng(kDefaultSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    int depth = static_cast<int>(1 + rng.below(10));
    std::map<std::string, Rational> ratios;
    for (int level = 0; level < depth; ++level) {
      for (unsigned long v = 0; v < (1ul << level); ++v) {
        if (!rng.coin()) continue;
        std::string node;
        for (int b = level - 1; b >= 0; --b) node.push_back((v >> b) & 1 ? '1' : '0');
        long den = rng.range(2, 9);
        ratios[node] = make_rational(rng.range(1, den - 1), den);
      }
    }
    auto random_tower = DyadicTower::from_ratios(depth, std::move(ratios));
    std::vector<int> bits;
    std::size_t length = 1 + rng.below(static_cast<std::uint64_t>(depth));
    for (std::size_t i = 0; i < length; ++i) bits.push_back(rng.coin() ? 1 : 0);
    auto random_branch = BranchChain::of(std::move(bits));

    for (const auto& [n, value] : verify_divergence(random_tower, random_branch,
                                                    static_cast<int>(length))) {
      if (value < n) {
        outcome.fail("trial " + std::to_string(trial) + ": integral " + to_string(value) +
                     " fell below n = " + std::to_string(n));
      }
    }
  }
  return outcome;
}

// Criterion 6: 300 random grid approximations, each grid-valued, below the
// function, and within one step of it at every atom; grid-valued inputs
// come back unchanged.
Outcome criterion_grid_approximation() {
  Outcome outcome;
  Rng rng(kDefaultSeed + 4);
  for (int trial = 0; trial < 300; ++trial) {
    auto algebra = letter_algebra(1 + rng.below(8));
    auto f = random_function(rng, algebra);
    Rational eps = random_positive_rational(rng, 9, 9);
    auto s = freudenthal_approx(f, eps);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!on_grid(s[i], eps) || s[i] > f[i] || f[i] - s[i] >= eps) {
        outcome.fail("trial " + std::to_string(trial) + ": f = " + to_string(f) +
                     ", eps = " + to_string(eps) + ", s = " + to_string(s));
      }
    }

    std::vector<Rational> snapped;
    for (std::size_t i = 0; i < f.size(); ++i)
      snapped.push_back(Rational(rng.range(-12, 12) * eps));
    auto fixed = SimpleFunction::from_values(algebra, std::move(snapped));
    if (freudenthal_approx(fixed, eps) != fixed) {
      outcome.fail("trial " + std::to_string(trial) + ": grid-valued input moved");
    }
  }
  return outcome;
}

// Criterion 7: the checker is not vacuous. Replacing the pairing with a
// cycle, or starving a partition block of measure, must each surface at
// least one failing verdict.
Outcome criterion_mutation_sensitivity() {
  Outcome outcome;
  auto space = duplicate_space(letter_algebra(3));
  for (std::size_t i = 0; i < space.involution.size(); ++i)
    space.involution[i] = (i + 1) % space.involution.size();
  auto cycled = CeOperator::duplicate_unchecked(std::move(space));
  if (check_ce_axioms(cycled, 100, kDefaultSeed).all_passed()) {
    outcome.fail("non-involutive pairing passed every axiom");
  }

  auto algebra = letter_algebra(3);
  std::vector<ClopenSet> blocks{
      ClopenSet::singleton(algebra, "a"),
      ClopenSet::of(algebra, std::vector<std::string>{"b", "c"})};
  auto starved = CeOperator::partition_average_unchecked(
      std::move(blocks),
      OrderFunctional::from_map(algebra, {{"a", make_rational(1)}}));
  if (check_ce_axioms(starved, 100, kDefaultSeed).all_passed()) {
    outcome.fail("zero-measure block passed every axiom");
  }
  return outcome;
}

// Criterion 8: 100 random values of each of the five text formats survive
// write, parse, rewrite byte-identically, and seeded reports are bitwise
// reproducible run to run.
Outcome criterion_roundtrip_determinism() {
  Outcome outcome;
  Rng rng(kDefaultSeed + 5);
  for (int trial = 0; trial < 100; ++trial) {
    auto algebra = rng.coin() ? letter_algebra(1 + rng.below(8))
                              : BooleanAlgebra::dyadic(static_cast<int>(1 + rng.below(4)));

    std::string text = io::write_algebra(algebra);
    if (io::write_algebra(io::parse_algebra(text)) != text) {
      outcome.fail("algebra text drifted: " + text);
    }

    text = io::write_function(random_function(rng, algebra));
    if (io::write_function(io::parse_function(text)) != text) {
      outcome.fail("function text drifted: " + text);
    }

    std::vector<Rational> weights;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i)
      weights.push_back(random_nonnegative_rational(rng, 9, 9));
    text = io::write_measure(OrderFunctional::from_weights(algebra, std::move(weights)));
    if (io::write_measure(io::parse_measure(text)) != text) {
      outcome.fail("measure text drifted: " + text);
    }

    auto base = letter_algebra(1 + rng.below(6));
    if (rng.coin()) {
      text = io::write_operator(CeOperator::duplicate(duplicate_space(base)));
    } else {
      std::vector<Rational> mass;
      for (std::size_t i = 0; i < base->atom_count(); ++i)
        mass.push_back(random_positive_rational(rng, 9, 9));
      std::vector<ClopenSet> blocks;
      for (const auto& atom : base->atoms()) blocks.push_back(ClopenSet::singleton(base, atom));
      text = io::write_operator(CeOperator::partition_average(
          std::move(blocks), OrderFunctional::from_weights(base, std::move(mass))));
    }
    if (io::write_operator(io::parse_operator(text)) != text) {
      outcome.fail("operator text drifted: " + text);
    }

    int depth = static_cast<int>(1 + rng.below(6));
    std::map<std::string, Rational> ratios;
    if (rng.coin()) {
      long den = rng.range(2, 9);
      ratios[""] = make_rational(rng.range(1, den - 1), den);
    }
    auto tower = rng.coin() ? DyadicTower::uniform(depth)
                            : DyadicTower::from_ratios(depth, std::move(ratios));
    text = io::write_tower(tower);
    if (io::write_tower(io::parse_tower(text)) != text) {
      outcome.fail("tower text drifted: " + text);
    }
  }

  auto op = CeOperator::duplicate(duplicate_space(letter_algebra(4)));
  auto first = check_ce_axioms(op, 50, 7);
  auto second = check_ce_axioms(op, 50, 7);
  for (std::size_t i = 0; i < first.verdicts.size(); ++i) {
    if (first.verdicts[i].axiom != second.verdicts[i].axiom ||
        first.verdicts[i].trials != second.verdicts[i].trials ||
        first.verdicts[i].passed != second.verdicts[i].passed ||
        first.verdicts[i].counterexample != second.verdicts[i].counterexample) {
      outcome.fail("axiom report differed between same-seed runs");
    }
  }

  auto suites_a = run_selftest(kDefaultSeed);
  auto suites_b = run_selftest(kDefaultSeed);
  if (suites_a.size() != suites_b.size()) {
    outcome.fail("suite counts differed between same-seed runs");
    return outcome;
  }
  for (std::size_t i = 0; i < suites_a.size(); ++i) {
    if (suites_a[i].name != suites_b[i].name || suites_a[i].checks != suites_b[i].checks ||
        suites_a[i].failures != suites_b[i].failures ||
        suites_a[i].detail != suites_b[i].detail) {
      outcome.fail("suite \"" + suites_a[i].name + "\" differed between same-seed runs");
    }
  }
  return outcome;
}

struct Criterion {
  const char* label;
  Outcome (*check)();
  /// Wall-clock budget in seconds; 0 means unbounded.
  double bound;
};

}  // namespace
}  // namespace condex

int main() {
  using namespace condex;
  const std::vector<Criterion> criteria{
      {"six axiom verdicts pass on 200 random pair-averaging operators",
       criterion_axiom_suite, 30.0},
      {"range membership, fixed points, and pairing symmetry coincide",
       criterion_range_characterization, 0.0},
      {"vanishing on every clopen happens only for the zero functional",
       criterion_vanishing_dichotomy, 5.0},
      {"positive splits cover the space with positive mass on both parts",
       criterion_positive_split, 0.0},
      {"divergence integrals match the frozen table and dominate n",
       criterion_divergence, 10.0},
      {"grid approximants are grid-valued and within one step below",
       criterion_grid_approximation, 0.0},
      {"corrupted operators fail at least one axiom verdict",
       criterion_mutation_sensitivity, 0.0},
      {"canonical text round-trips and seeded reports are reproducible",
       criterion_roundtrip_determinism, 0.0},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome = criteria[i].check();
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start).count();
    if (criteria[i].bound > 0 && seconds > criteria[i].bound) {
      outcome.fail("wall clock exceeded the budget");
    }

    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (outcome.passed ? "PASS" : "FAIL") << "  "
         << criteria[i].label << "  [" << std::fixed << std::setprecision(2) << seconds
         << "s";
    if (criteria[i].bound > 0) {
      line << ", bound " << std::setprecision(0) << criteria[i].bound << "s";
    }
    line << "]";
    if (!outcome.passed) {
      line << "  " << outcome.detail;
    }
    std::cout << line.str() << "\n";
    if (outcome.passed) ++passed;
  }

  std::cout << criteria.size() << " criteria, " << passed << " passed, "
            << (criteria.size() - passed) << " failed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
