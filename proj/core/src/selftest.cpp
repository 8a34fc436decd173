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

#include "condex/selftest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "condex/boolean_algebra.hpp"
#include "condex/cond_expectation.hpp"
#include "condex/functional.hpp"
#include "condex/io.hpp"
#include "condex/rational.hpp"
#include "condex/simple_function.hpp"
#include "condex/witness.hpp"

namespace condex {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  /// describe() runs only on failure, so hot loops stay allocation-free.
  template <typename DescribeFn>
  void expect(bool condition, DescribeFn&& describe) {
    ++result_.checks;
    if (!condition) {
      ++result_.failures;
      if (result_.detail.empty()) result_.detail = describe();
    }
  }

  void expect(bool condition, const char* label) {
    expect(condition, [label] { return std::string(label); });
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string atom_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

AlgebraPtr letter_algebra(std::size_t atoms) {
  std::vector<std::string> names;
  names.reserve(atoms);
  for (std::size_t i = 0; i < atoms; ++i) names.push_back(atom_name(i));
  return BooleanAlgebra::finite(std::move(names));
}

AlgebraPtr random_algebra(Rng& rng, std::size_t min_atoms, std::size_t max_atoms) {
  return letter_algebra(min_atoms + rng.below(max_atoms - min_atoms + 1));
}

std::vector<ClopenSet> all_clopens(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->atom_count();
  std::vector<ClopenSet> sets;
  sets.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<bool> mask(n, false);
    for (std::size_t i = 0; i < n; ++i) mask[i] = (bits >> i) & 1;
    sets.push_back(ClopenSet::from_mask(algebra, std::move(mask)));
  }
  return sets;
}

ClopenSet random_clopen(Rng& rng, const AlgebraPtr& algebra) {
  std::vector<bool> mask(algebra->atom_count(), false);
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = rng.coin();
  return ClopenSet::from_mask(algebra, std::move(mask));
}

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

OrderFunctional random_measure(Rng& rng, const AlgebraPtr& algebra,
                               bool strictly_positive) {
  std::vector<Rational> weights;
  weights.reserve(algebra->atom_count());
  for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
    weights.push_back(strictly_positive ? random_positive_rational(rng, 8, 4)
                                        : random_nonnegative_rational(rng, 8, 4));
  }
  return OrderFunctional::from_weights(algebra, std::move(weights));
}

/// Every block non-empty, atoms assigned round-robin first so coverage is
/// guaranteed, then shuffled across blocks.
std::vector<ClopenSet> random_partition(Rng& rng, const AlgebraPtr& algebra) {
  const std::size_t n = algebra->atom_count();
  const std::size_t block_count = 1 + rng.below(n);
  std::vector<std::vector<bool>> masks(block_count, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = i < block_count ? i : rng.below(block_count);
    masks[b][i] = true;
  }
  std::vector<ClopenSet> blocks;
  blocks.reserve(block_count);
  for (auto& mask : masks) {
    blocks.push_back(ClopenSet::from_mask(algebra, std::move(mask)));
  }
  return blocks;
}

CeOperator random_duplicate_operator(Rng& rng, std::size_t min_base, std::size_t max_base) {
  return CeOperator::duplicate(duplicate_space(random_algebra(rng, min_base, max_base)));
}

CeOperator random_partition_operator(Rng& rng, std::size_t min_atoms,
                                     std::size_t max_atoms) {
  AlgebraPtr algebra = random_algebra(rng, min_atoms, max_atoms);
  return CeOperator::partition_average(random_partition(rng, algebra),
                                       random_measure(rng, algebra, true));
}

Rational random_open_unit_ratio(Rng& rng) {
  const long den = rng.range(2, 9);
  return make_rational(rng.range(1, den - 1), den);
}

DyadicTower random_tower(Rng& rng, int max_depth) {
  const int depth = static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(max_depth)));
  std::map<std::string, Rational> ratios;
  for (int level = 0; level < depth; ++level) {
    for (std::size_t node = 0; node < (std::size_t{1} << level); ++node) {
      if (!rng.coin()) continue;  // defaulted nodes exercise the 1/2 fallback
      std::string key;
      for (int b = level - 1; b >= 0; --b) key.push_back((node >> b) & 1 ? '1' : '0');
      ratios[key] = random_open_unit_ratio(rng);
    }
  }
  return DyadicTower::from_ratios(depth, std::move(ratios));
}

BranchChain random_branch(Rng& rng, int depth, int min_length) {
  const int length =
      min_length + static_cast<int>(rng.below(static_cast<std::uint64_t>(depth - min_length + 1)));
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) bits.push_back(rng.coin() ? 1 : 0);
  return BranchChain::of(std::move(bits));
}

/// All |grid|^atoms functions with values drawn from the grid.
std::vector<SimpleFunction> grid_functions(const AlgebraPtr& algebra,
                                           const std::vector<Rational>& grid) {
  const std::size_t n = algebra->atom_count();
  std::vector<SimpleFunction> out;
  std::vector<std::size_t> odometer(n, 0);
  while (true) {
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) values.push_back(grid[odometer[i]]);
    out.push_back(SimpleFunction::from_values(algebra, std::move(values)));
    std::size_t pos = 0;
    while (pos < n && ++odometer[pos] == grid.size()) odometer[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

// --- boolean_algebra suites ---

SuiteResult suite_lattice_laws() {
  Checker c("lattice-laws");
  for (std::size_t atoms = 1; atoms <= 5; ++atoms) {
    AlgebraPtr algebra = letter_algebra(atoms);
    std::vector<ClopenSet> sets = all_clopens(algebra);
    const ClopenSet full = ClopenSet::full(algebra);
    for (const ClopenSet& a : sets) {
      for (const ClopenSet& b : sets) {
        c.expect(a.meet(b) == b.meet(a), "meet commutativity");
        c.expect(a.join(b) == b.join(a), "join commutativity");
        c.expect(a.meet(a.join(b)) == a, "absorption over join");
        c.expect(a.join(a.meet(b)) == a, "absorption over meet");
        c.expect(a.meet(b).complement() == a.complement().join(b.complement()),
                 "De Morgan for meet");
        c.expect(a.join(b).complement() == a.complement().meet(b.complement()),
                 "De Morgan for join");
      }
      c.expect(a.join(a.complement()) == full, "complement join law");
      c.expect(a.meet(a.complement()).is_empty(), "complement meet law");
    }
    for (const ClopenSet& a : sets) {
      for (const ClopenSet& b : sets) {
        for (const ClopenSet& d : sets) {
          c.expect(a.meet(b.meet(d)) == a.meet(b).meet(d), "meet associativity");
          c.expect(a.join(b.join(d)) == a.join(b).join(d), "join associativity");
          c.expect(a.meet(b.join(d)) == a.meet(b).join(a.meet(d)),
                   "meet distributes over join");
          c.expect(a.join(b.meet(d)) == a.join(b).meet(a.join(d)),
                   "join distributes over meet");
        }
      }
    }
  }
  return c.take();
}

SuiteResult suite_separation_dichotomy() {
  Checker c("separation-dichotomy");
  for (std::size_t atoms = 1; atoms <= 5; ++atoms) {
    AlgebraPtr algebra = letter_algebra(atoms);
    std::vector<ClopenSet> sets = all_clopens(algebra);
    for (const ClopenSet& a : sets) {
      c.expect(is_connected(a) == (a.size() <= 1), "connectivity is exactly |A| <= 1");
      auto witness = separation_witness(a);
      if (a.size() >= 2) {
        c.expect(witness.has_value(), "disconnected sets must yield a witness");
        if (witness) {
          c.expect(a.intersects(*witness), "witness meets A");
          c.expect(!a.subset_of(*witness), "witness does not swallow A");
        }
      } else {
        c.expect(!witness.has_value(), "connected sets yield no witness");
        for (const ClopenSet& d : sets) {
          if (a.intersects(d)) {
            c.expect(a.subset_of(d), "connected A meeting C lies inside C");
          }
        }
      }
    }
  }
  return c.take();
}

SuiteResult suite_dyadic_counts() {
  Checker c("dyadic-counts");
  for (int depth = 0; depth <= 3; ++depth) {
    AlgebraPtr algebra = BooleanAlgebra::dyadic(depth);
    c.expect(algebra->atom_count() == (std::size_t{1} << depth),
             "dyadic atom count is 2^depth");
    c.expect(algebra->dyadic_depth() == depth, "depth round-trips");
    for (const std::string& atom : algebra->atoms()) {
      c.expect(atom.size() == static_cast<std::size_t>(depth),
               "atoms are bitstrings of the depth length");
    }
    c.expect(all_clopens(algebra).size() == (std::size_t{1} << algebra->atom_count()),
             "clopen count is 2^(2^depth)");
  }
  return c.take();
}

// --- simple_function suites ---

SuiteResult suite_riesz_axioms() {
  Checker c("riesz-axioms");
  AlgebraPtr algebra = letter_algebra(3);
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(2)};
  std::vector<SimpleFunction> fs = grid_functions(algebra, grid);
  const std::vector<Rational> scalars{make_rational(1, 2), Rational(2), Rational(3)};
  for (const SimpleFunction& f : fs) {
    c.expect(abs(f) == sup(f, -f), "absolute value is sup with the negation");
    for (const SimpleFunction& g : fs) {
      c.expect(sup(f, g) + inf(f, g) == f + g, "sup + inf identity");
      if (!pointwise_leq(f, g)) continue;
      for (const SimpleFunction& h : fs) {
        c.expect(pointwise_leq(f + h, g + h), "order is translation invariant");
      }
      for (const Rational& s : scalars) {
        c.expect(pointwise_leq(s * f, s * g), "order respects positive scalars");
      }
    }
  }
  return c.take();
}

SuiteResult suite_level_set_monotonicity() {
  Checker c("level-set-monotonicity");
  AlgebraPtr algebra = letter_algebra(3);
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(2)};
  const std::vector<Rational> lambdas{Rational(-2), Rational(-1), Rational(0),
                                      make_rational(1, 2), Rational(1), Rational(3)};
  std::vector<SimpleFunction> fs = grid_functions(algebra, grid);
  for (const SimpleFunction& f : fs) {
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
      c.expect(level_set(f, lambdas[i]).subset_of(level_set(f, lambdas[i + 1])),
               "level sets grow with lambda");
    }
    for (const SimpleFunction& g : fs) {
      if (!pointwise_leq(f, g)) continue;
      for (const Rational& lambda : lambdas) {
        c.expect(level_set(g, lambda).subset_of(level_set(f, lambda)),
                 "level sets shrink as the function grows");
      }
    }
  }
  return c.take();
}

SuiteResult suite_freudenthal_bounds(Rng& rng) {
  Checker c("freudenthal-bounds");
  for (int t = 0; t < 300; ++t) {
    AlgebraPtr algebra = random_algebra(rng, 1, 8);
    SimpleFunction f = random_function(rng, algebra);
    Rational eps = random_positive_rational(rng, 4, 6);
    SimpleFunction s = freudenthal_approx(f, eps);
    for (std::size_t i = 0; i < f.size(); ++i) {
      c.expect(on_grid(s[i], eps), "approximant values sit on the grid");
      c.expect(s[i] <= f[i], "approximant stays below");
      c.expect(f[i] - s[i] < eps, "pointwise error stays under eps");
      c.expect(s[i] + eps > f[i], "approximant is the greatest grid function below");
    }
    // Grid-valued input is the fixed point.
    SimpleFunction snapped = freudenthal_approx(s, eps);
    c.expect(snapped == s, "grid-valued functions are fixed");
  }
  return c.take();
}

// --- functional suites ---

SuiteResult suite_measure_additivity(Rng& rng) {
  Checker c("measure-additivity");
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    AlgebraPtr algebra = letter_algebra(atoms);
    std::vector<ClopenSet> sets = all_clopens(algebra);
    for (int round = 0; round < 5; ++round) {
      OrderFunctional phi = random_measure(rng, algebra, false);
      for (const ClopenSet& a : sets) {
        c.expect(phi.measure_of(a) == phi.evaluate(SimpleFunction::indicator(a)),
                 "measure of a set equals the integral of its indicator");
        for (const ClopenSet& b : sets) {
          c.expect(phi.measure_of(a.join(b)) + phi.measure_of(a.meet(b)) ==
                       phi.measure_of(a) + phi.measure_of(b),
                   "modular additivity");
        }
      }
    }
  }
  return c.take();
}

SuiteResult suite_vanishing_dichotomy(Rng& rng) {
  Checker c("vanishing-dichotomy");
  const std::vector<Rational> grid{Rational(0), make_rational(1, 3), Rational(1)};
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    AlgebraPtr algebra = letter_algebra(atoms);
    std::vector<ClopenSet> sets = all_clopens(algebra);
    std::vector<std::size_t> odometer(atoms, 0);
    while (true) {
      std::vector<Rational> weights;
      weights.reserve(atoms);
      for (std::size_t i = 0; i < atoms; ++i) weights.push_back(grid[odometer[i]]);
      OrderFunctional phi = OrderFunctional::from_weights(algebra, std::move(weights));
      bool vanishes_brute = true;
      for (const ClopenSet& a : sets) {
        if (phi.measure_of(a) != 0) {
          vanishes_brute = false;
          break;
        }
      }
      c.expect(phi.vanishes_on_clopens() == vanishes_brute,
               "clopen vanishing matches full enumeration");
      c.expect(vanishes_brute == phi.is_zero(), "clopen vanishing forces the zero functional");
      if (phi.is_zero()) {
        for (int t = 0; t < 5; ++t) {
          c.expect(phi.evaluate(random_function(rng, algebra)) == 0,
                   "zero functional kills every function");
        }
      }
      std::size_t pos = 0;
      while (pos < atoms && ++odometer[pos] == grid.size()) odometer[pos++] = 0;
      if (pos == atoms) break;
    }
  }
  return c.take();
}

SuiteResult suite_measure_stabilization(Rng& rng) {
  Checker c("measure-stabilization");
  for (int t = 0; t < 200; ++t) {
    AlgebraPtr algebra = random_algebra(rng, 1, 8);
    OrderFunctional phi = random_measure(rng, algebra, true);
    std::vector<ClopenSet> chain{ClopenSet::full(algebra)};
    for (std::size_t k = 0; k < algebra->atom_count(); ++k) {
      chain.push_back(chain.back().meet(random_clopen(rng, algebra)));
    }
    const ClopenSet& limit = chain.back();
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      c.expect(chain[k + 1].subset_of(chain[k]), "chain is decreasing");
      c.expect(phi.measure_of(chain[k + 1]) <= phi.measure_of(chain[k]),
               "values decrease along the chain");
      // Strict positivity makes the measure detect exactly when the chain
      // stops moving.
      c.expect((phi.measure_of(chain[k]) == phi.measure_of(chain[k + 1])) ==
                   (chain[k] == chain[k + 1]),
               "value stabilizes exactly with the sets");
    }
    c.expect(phi.measure_of(chain.back()) == phi.measure_of(limit),
             "tail value is the limit value");
  }
  return c.take();
}

SuiteResult suite_split_postcondition(Rng& rng) {
  Checker c("split-postcondition");
  for (int t = 0; t < 1000; ++t) {
    AlgebraPtr algebra = random_algebra(rng, 2, 16);
    OrderFunctional phi = random_measure(rng, algebra, true);
    auto [k1, k2] = phi.positive_split();
    c.expect(k1.meet(k2).is_empty(), "split parts are disjoint");
    c.expect(k1.join(k2).is_full(), "split parts cover the space");
    Rational a1 = phi.measure_of(k1);
    Rational a2 = phi.measure_of(k2);
    c.expect(a1 > 0, "first part has positive value");
    c.expect(a2 > 0, "second part has positive value");
    c.expect(a1 + a2 == phi.total(), "split values add to the total");
  }
  return c.take();
}

// --- cond_expectation suites ---

SuiteResult suite_projection_exhaustive(Rng& rng) {
  Checker c("projection-exhaustive");
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1)};
  for (std::size_t base_atoms = 1; base_atoms <= 2; ++base_atoms) {
    CeOperator op = CeOperator::duplicate(duplicate_space(letter_algebra(base_atoms)));
    for (const SimpleFunction& f : grid_functions(op.algebra(), grid)) {
      SimpleFunction tf = op.apply(f);
      c.expect(op.apply(tf) == tf, "T is idempotent on the value grid");
    }
  }
  {
    AlgebraPtr algebra = letter_algebra(3);
    std::vector<ClopenSet> singles;
    for (const std::string& atom : algebra->atoms()) {
      singles.push_back(ClopenSet::singleton(algebra, atom));
    }
    CeOperator identity = CeOperator::partition_average(
        std::move(singles), random_measure(rng, algebra, true));
    for (const SimpleFunction& f : grid_functions(algebra, grid)) {
      c.expect(identity.apply(f) == f, "singleton partition averages to the identity");
    }
  }
  for (int t = 0; t < 1000; ++t) {
    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 8)
                               : random_partition_operator(rng, 1, 16);
    SimpleFunction f = random_function(rng, op.algebra());
    SimpleFunction tf = op.apply(f);
    c.expect(op.apply(tf) == tf, "T is idempotent on random functions");
  }
  return c.take();
}

SuiteResult suite_operator_monotonicity(Rng& rng) {
  Checker c("operator-monotonicity");
  for (int t = 0; t < 500; ++t) {
    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 8)
                               : random_partition_operator(rng, 1, 16);
    SimpleFunction f = random_function(rng, op.algebra());
    SimpleFunction g = f + random_nonnegative_function(rng, op.algebra());
    c.expect(pointwise_leq(op.apply(f), op.apply(g)), "T preserves the order");
  }
  return c.take();
}

SuiteResult suite_unit_preservation(Rng& rng) {
  Checker c("unit-preservation");
  for (int t = 0; t < 500; ++t) {
    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 8)
                               : random_partition_operator(rng, 1, 16);
    SimpleFunction e = random_weak_unit(rng, op.algebra());
    c.expect(is_strictly_positive(op.apply(e)), "T sends weak order units to weak order units");
    c.expect(op.apply(SimpleFunction::constant(op.algebra(), Rational(1))) ==
                 SimpleFunction::constant(op.algebra(), Rational(1)),
             "T fixes the constant one");
  }
  return c.take();
}

SuiteResult suite_averaging_identity(Rng& rng) {
  Checker c("averaging-identity");
  for (int t = 0; t < 500; ++t) {
    CeOperator op = random_duplicate_operator(rng, 1, 8);
    const auto& sigma = op.space().involution;
    std::vector<Rational> symmetric(op.algebra()->atom_count());
    for (std::size_t i = 0; i < symmetric.size(); ++i) {
      if (i <= sigma[i]) {
        symmetric[i] = random_rational(rng, 8, 4);
        symmetric[sigma[i]] = symmetric[i];
      }
    }
    SimpleFunction g = SimpleFunction::from_values(op.algebra(), std::move(symmetric));
    SimpleFunction f = random_function(rng, op.algebra());
    c.expect(op.apply(g * f) == g * op.apply(f),
             "range elements factor out of the average");
  }
  return c.take();
}

SuiteResult suite_operator_strict_positivity(Rng& rng) {
  Checker c("operator-strict-positivity");
  for (int t = 0; t < 500; ++t) {
    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 8)
                               : random_partition_operator(rng, 1, 16);
    std::vector<Rational> values(op.algebra()->atom_count(), Rational(0));
    const std::size_t hot = rng.below(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = rng.coin() ? random_nonnegative_rational(rng, 8, 4) : Rational(0);
    }
    values[hot] = random_positive_rational(rng, 8, 4);
    SimpleFunction f = SimpleFunction::from_values(op.algebra(), std::move(values));
    SimpleFunction tf = op.apply(f);
    c.expect(is_positive(tf), "T maps positive to positive");
    if (op.form() == CeOperator::Form::Duplicate) {
      const auto& sigma = op.space().involution;
      c.expect(tf[hot] > 0 && tf[sigma[hot]] > 0,
               "the average is positive on the whole pair");
    }
  }
  return c.take();
}

SuiteResult suite_range_riesz_subspace(Rng& rng) {
  Checker c("range-riesz-subspace");
  for (int t = 0; t < 200; ++t) {
    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 6)
                               : random_partition_operator(rng, 1, 12);
    std::vector<SimpleFunction> basis = op.range_basis();
    auto random_combo = [&]() {
      SimpleFunction g = SimpleFunction::zero(op.algebra());
      for (const SimpleFunction& b : basis) g = g + random_rational(rng, 6, 3) * b;
      return g;
    };
    SimpleFunction g1 = random_combo();
    SimpleFunction g2 = random_combo();
    Rational s = random_rational(rng, 6, 3);
    for (const SimpleFunction& member :
         {g1 + g2, s * g1, sup(g1, g2), inf(g1, g2), abs(g1)}) {
      c.expect(op.range_membership(member), "combination stays in the range");
      c.expect(op.apply(member) == member, "combination is a fixed point");
    }
  }
  return c.take();
}

SuiteResult suite_range_fixed_points(Rng& rng) {
  Checker c("range-fixed-points");
  for (int t = 0; t < 500; ++t) {
    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 8)
                               : random_partition_operator(rng, 1, 16);
    SimpleFunction g = random_function(rng, op.algebra());
    const bool member = op.range_membership(g);
    c.expect(member == (op.apply(g) == g), "membership coincides with being fixed");
    if (op.form() == CeOperator::Form::Duplicate) {
      const auto& sigma = op.space().involution;
      bool symmetric = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != g[sigma[i]]) {
          symmetric = false;
          break;
        }
      }
      c.expect(member == symmetric, "membership coincides with pair symmetry");
    }
  }
  return c.take();
}

SuiteResult suite_duplicate_involution() {
  Checker c("duplicate-involution");
  for (std::size_t base_atoms = 1; base_atoms <= 16; ++base_atoms) {
    DuplicateSpace space = duplicate_space(letter_algebra(base_atoms));
    c.expect(space.doubled->atom_count() == 2 * base_atoms, "doubling doubles the atom count");
    for (std::size_t i = 0; i < space.involution.size(); ++i) {
      c.expect(space.involution[space.involution[i]] == i, "pairing applied twice is the identity");
      c.expect(space.involution[i] != i, "pairing moves every atom");
    }
    for (std::size_t k = 0; k < base_atoms; ++k) {
      c.expect(space.doubled->atoms()[2 * k] == space.base->atoms()[k],
               "even positions carry the base atoms");
      c.expect(space.doubled->atoms()[2 * k + 1] == space.base->atoms()[k] + "'",
               "odd positions carry the primed copies");
    }
  }
  return c.take();
}

SuiteResult suite_axiom_report_clean(Rng& rng) {
  Checker c("axiom-report-clean");
  const std::vector<std::string> expected_names{"positivity",        "projection",
                                                "linearity",         "order continuity",
                                                "unit preservation", "range closure"};
  auto check_report = [&](const CeOperator& op) {
    AxiomReport report = check_ce_axioms(op, 60, rng.next());
    c.expect(report.verdicts.size() == expected_names.size(), "six verdicts per report");
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
      c.expect(report.verdicts[i].axiom == expected_names[i], "verdict order is fixed");
      c.expect(report.verdicts[i].passed, [&] {
        return report.verdicts[i].axiom + " failed: " + report.verdicts[i].counterexample;
      });
    }
    c.expect(report.all_passed(), "all verdicts pass on a lawful operator");
  };
  for (int t = 0; t < 20; ++t) {
    check_report(random_duplicate_operator(rng, 1, 8));
    check_report(random_partition_operator(rng, 1, 12));
  }
  {
    AlgebraPtr algebra = letter_algebra(4);
    std::vector<ClopenSet> singles;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
      singles.push_back(ClopenSet::singleton(algebra, algebra->atoms()[i]));
    }
    check_report(CeOperator::partition_average(std::move(singles),
                                               random_measure(rng, algebra, true)));
  }
  return c.take();
}

SuiteResult suite_mutation_sensitivity(Rng& rng) {
  Checker c("mutation-sensitivity");
  for (std::size_t base_atoms = 2; base_atoms <= 8; ++base_atoms) {
    DuplicateSpace space = duplicate_space(letter_algebra(base_atoms));
    // Cyclic shift: fixed-point-free but not an involution.
    for (std::size_t i = 0; i < space.involution.size(); ++i) {
      space.involution[i] = (i + 1) % space.involution.size();
    }
    bool rejected = false;
    try {
      CeOperator::duplicate(space);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    c.expect(rejected, "checked factory rejects a broken pairing");
    AxiomReport report =
        check_ce_axioms(CeOperator::duplicate_unchecked(space), 40, rng.next());
    c.expect(!report.all_passed(), "broken pairing trips the checker");
    for (const AxiomVerdict& v : report.verdicts) {
      if (v.axiom == "projection") {
        c.expect(!v.passed, "broken pairing fails idempotence");
      }
    }
  }
  {
    AlgebraPtr algebra = letter_algebra(3);
    std::vector<ClopenSet> blocks{
        ClopenSet::singleton(algebra, "a"),
        ClopenSet::of(algebra, std::vector<std::string>{"b", "c"})};
    OrderFunctional dead = OrderFunctional::from_map(algebra, {{"a", Rational(1)}});
    bool rejected = false;
    try {
      CeOperator::partition_average(blocks, dead);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    c.expect(rejected, "checked factory rejects a weightless block");
    AxiomReport report = check_ce_axioms(
        CeOperator::partition_average_unchecked(blocks, dead), 40, rng.next());
    c.expect(!report.all_passed(), "weightless block trips the checker");
  }
  return c.take();
}

// --- witness suites ---

SuiteResult suite_tower_level_sums(Rng& rng) {
  Checker c("tower-level-sums");
  for (int t = 0; t < 100; ++t) {
    DyadicTower tower = random_tower(rng, 8);
    for (int level = 0; level <= tower.depth(); ++level) {
      Rational sum(0);
      for (std::size_t node = 0; node < (std::size_t{1} << level); ++node) {
        std::string key;
        for (int b = level - 1; b >= 0; --b) key.push_back((node >> b) & 1 ? '1' : '0');
        Rational mu = tower.node_measure(key);
        c.expect(mu > 0, "node measures are strictly positive");
        sum += mu;
      }
      c.expect(sum == 1, "each level sums to one");
    }
    c.expect(tower.measure().total() == 1, "leaf measure has total one");
    c.expect(tower.measure().is_strictly_positive(), "leaf measure is strictly positive");
  }
  return c.take();
}

SuiteResult suite_tower_coherence(Rng& rng) {
  Checker c("tower-coherence");
  for (int t = 0; t < 100; ++t) {
    DyadicTower tower = random_tower(rng, 8);
    for (int level = 0; level < tower.depth(); ++level) {
      for (std::size_t node = 0; node < (std::size_t{1} << level); ++node) {
        std::string key;
        for (int b = level - 1; b >= 0; --b) key.push_back((node >> b) & 1 ? '1' : '0');
        c.expect(tower.node_measure(key) ==
                     tower.node_measure(key + "0") + tower.node_measure(key + "1"),
                 "parent measure splits over the children");
      }
    }
    for (std::size_t i = 0; i < tower.algebra()->atom_count(); ++i) {
      c.expect(tower.measure().weight_at(i) ==
                   tower.node_measure(tower.algebra()->atoms()[i]),
               "leaf weights agree with path products");
    }
  }
  return c.take();
}

SuiteResult suite_alpha_chain(Rng& rng) {
  Checker c("alpha-chain");
  for (int t = 0; t < 200; ++t) {
    DyadicTower tower = random_tower(rng, 8);
    BranchChain branch = random_branch(rng, tower.depth(), 0);
    std::vector<Rational> a = alphas(tower, branch);
    std::vector<ClopenSet> sets = branch_sets(tower, branch);
    c.expect(a.size() == branch.length() + 1, "one alpha per prefix");
    c.expect(a.front() == 1, "alpha starts at the full mass");
    for (std::size_t k = 0; k < a.size(); ++k) {
      c.expect(a[k] > 0, "alphas stay strictly positive");
      c.expect(a[k] == tower.measure().measure_of(sets[k]),
               "path product agrees with the atom sum");
      if (k > 0) {
        c.expect(a[k] < a[k - 1], "alphas strictly decrease");
        c.expect(sets[k].subset_of(sets[k - 1]), "branch sets nest");
        c.expect(sets[k].size() < sets[k - 1].size(), "nesting is strict");
      }
    }
  }
  return c.take();
}

SuiteResult suite_divergence_golden() {
  Checker c("divergence-golden");
  DyadicTower tower = DyadicTower::uniform(12);
  BranchChain branch = BranchChain::parse("000000000000");
  auto table = verify_divergence(tower, branch, 12);
  c.expect(table.size() == 12, "one row per truncation");
  for (const auto& [n, value] : table) {
    c.expect(value == make_rational(static_cast<long>(n) * (n - 1), 4) + n,
             "uniform growth law n(n-1)/4 + n");
    c.expect(value >= n, "growth beats the truncation index");
  }
  // Spot values on a small tower: 2 outside the second set, 8 outside the
  // third, 24 on the innermost.
  DyadicTower small = DyadicTower::uniform(3);
  SimpleFunction f3 = divergence_function(small, BranchChain::parse("000"), 3);
  c.expect(f3.at("000") == 24, "innermost value");
  c.expect(f3.at("001") == 8, "second ring value");
  c.expect(f3.at("010") == 2 && f3.at("011") == 2, "first ring value");
  c.expect(f3.at("100") == 0 && f3.at("111") == 0, "outside the branch");
  return c.take();
}

SuiteResult suite_divergence_growth(Rng& rng) {
  Checker c("divergence-growth");
  for (int t = 0; t < 100; ++t) {
    DyadicTower tower = random_tower(rng, 8);
    BranchChain branch = random_branch(rng, tower.depth(), 1);
    const int upto = static_cast<int>(branch.length());
    auto table = verify_divergence(tower, branch, upto);
    Rational previous(0);
    for (const auto& [n, value] : table) {
      c.expect(value >= n, "phi(f_n) dominates n");
      c.expect(value > previous, "phi(f_n) strictly increases");
      previous = value;
    }
    SimpleFunction prev = divergence_function(tower, branch, 1);
    for (int n = 2; n <= upto; ++n) {
      SimpleFunction next = divergence_function(tower, branch, n);
      c.expect(pointwise_leq(prev, next), "truncations grow pointwise");
      prev = next;
    }
  }
  return c.take();
}

SuiteResult suite_truncation_consistency(Rng& rng) {
  Checker c("truncation-consistency");
  for (int t = 0; t < 100; ++t) {
    DyadicTower tower = random_tower(rng, 7);
    std::map<std::string, Rational> deeper_ratios = tower.ratio_entries();
    for (std::size_t node = 0; node < (std::size_t{1} << tower.depth()); ++node) {
      if (!rng.coin()) continue;
      std::string key;
      for (int b = tower.depth() - 1; b >= 0; --b) {
        key.push_back((node >> b) & 1 ? '1' : '0');
      }
      deeper_ratios[key] = random_open_unit_ratio(rng);
    }
    DyadicTower deeper = DyadicTower::from_ratios(tower.depth() + 1, std::move(deeper_ratios));
    BranchChain branch = random_branch(rng, tower.depth(), 1);
    const int n = 1 + static_cast<int>(rng.below(branch.length()));
    SimpleFunction f = divergence_function(tower, branch, n);
    SimpleFunction lifted = embed_dyadic(f, deeper.depth());
    c.expect(lifted == divergence_function(deeper, branch, n),
             "the construction commutes with refinement");
    c.expect(tower.measure().evaluate(f) == deeper.measure().evaluate(lifted),
             "the integral does not depend on the realization depth");
  }
  return c.take();
}

// --- io suite ---

SuiteResult suite_io_round_trip(Rng& rng) {
  Checker c("io-round-trip");
  for (int t = 0; t < 100; ++t) {
    AlgebraPtr algebra = rng.coin()
                             ? random_algebra(rng, 1, 10)
                             : BooleanAlgebra::dyadic(static_cast<int>(rng.below(5)));
    std::string a1 = io::write_algebra(algebra);
    c.expect(io::write_algebra(io::parse_algebra(a1)) == a1, "algebra text is stable");

    std::string f1 = io::write_function(random_function(rng, algebra));
    c.expect(io::write_function(io::parse_function(f1)) == f1, "function text is stable");

    std::string m1 = io::write_measure(random_measure(rng, algebra, false));
    c.expect(io::write_measure(io::parse_measure(m1)) == m1, "measure text is stable");

    CeOperator op = rng.coin() ? random_duplicate_operator(rng, 1, 6)
                               : random_partition_operator(rng, 1, 10);
    std::string o1 = io::write_operator(op);
    c.expect(io::write_operator(io::parse_operator(o1)) == o1, "operator text is stable");

    DyadicTower tower =
        rng.coin() ? DyadicTower::uniform(static_cast<int>(1 + rng.below(8)))
                   : random_tower(rng, 8);
    std::string t1 = io::write_tower(tower);
    c.expect(io::write_tower(io::parse_tower(t1)) == t1, "tower text is stable");
  }
  return c.take();
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  std::uint64_t salt = 0;
  auto fresh = [&] { return Rng(seed + salt++); };

  results.push_back(suite_lattice_laws());
  results.push_back(suite_separation_dichotomy());
  results.push_back(suite_dyadic_counts());
  {
    results.push_back(suite_riesz_axioms());
    results.push_back(suite_level_set_monotonicity());
  }
  {
    Rng rng = fresh();
    results.push_back(suite_freudenthal_bounds(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_measure_additivity(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_vanishing_dichotomy(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_measure_stabilization(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_split_postcondition(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_projection_exhaustive(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_operator_monotonicity(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_unit_preservation(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_averaging_identity(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_operator_strict_positivity(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_range_riesz_subspace(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_range_fixed_points(rng));
  }
  results.push_back(suite_duplicate_involution());
  {
    Rng rng = fresh();
    results.push_back(suite_axiom_report_clean(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_mutation_sensitivity(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_tower_level_sums(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_tower_coherence(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_alpha_chain(rng));
  }
  results.push_back(suite_divergence_golden());
  {
    Rng rng = fresh();
    results.push_back(suite_divergence_growth(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_truncation_consistency(rng));
  }
  {
    Rng rng = fresh();
    results.push_back(suite_io_round_trip(rng));
  }
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed(); });
}

}  // namespace condex
