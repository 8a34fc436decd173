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

#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>
#include <vector>

#include "condex/boolean_algebra.hpp"
#include "condex/cond_expectation.hpp"
#include "condex/functional.hpp"
#include "condex/io.hpp"
#include "condex/rng.hpp"
#include "condex/simple_function.hpp"
#include "condex/witness.hpp"

namespace {

using namespace condex;

AlgebraPtr numbered_algebra(std::size_t n) {
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back("x" + std::to_string(i));
  return BooleanAlgebra::finite(std::move(atoms));
}

SimpleFunction seeded_function(const AlgebraPtr& algebra, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> values;
  values.reserve(algebra->atom_count());
  for (std::size_t i = 0; i < algebra->atom_count(); ++i)
    values.push_back(random_rational(rng, 99, 99));
  return SimpleFunction::from_values(algebra, std::move(values));
}

void BM_RieszSup(benchmark::State& state) {
  auto algebra = numbered_algebra(static_cast<std::size_t>(state.range(0)));
  auto f = seeded_function(algebra, 1);
  auto g = seeded_function(algebra, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sup(f, g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RieszSup)->Range(8, 4096)->Complexity(benchmark::oN);

void BM_DuplicateApply(benchmark::State& state) {
  auto op = CeOperator::duplicate(
      duplicate_space(numbered_algebra(static_cast<std::size_t>(state.range(0)))));
  auto f = seeded_function(op.algebra(), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.apply(f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DuplicateApply)->Range(8, 2048)->Complexity(benchmark::oN);

void BM_PartitionApply(benchmark::State& state) {
  auto algebra = numbered_algebra(static_cast<std::size_t>(state.range(0)));
  // Pair blocks: atoms 2k and 2k+1 share a block.
  std::vector<ClopenSet> blocks;
  for (std::size_t i = 0; i + 1 < algebra->atom_count(); i += 2) {
    std::vector<bool> mask(algebra->atom_count(), false);
    mask[i] = mask[i + 1] = true;
    blocks.push_back(ClopenSet::from_mask(algebra, std::move(mask)));
  }
  Rng rng(4);
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < algebra->atom_count(); ++i)
    weights.push_back(random_positive_rational(rng, 9, 9));
  auto op = CeOperator::partition_average(
      std::move(blocks), OrderFunctional::from_weights(algebra, std::move(weights)));
  auto f = seeded_function(algebra, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.apply(f));
  }
}
BENCHMARK(BM_PartitionApply)->Range(8, 2048);

void BM_AxiomSuite(benchmark::State& state) {
  auto op = CeOperator::duplicate(
      duplicate_space(numbered_algebra(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_ce_axioms(op, 100, kDefaultSeed));
  }
}
BENCHMARK(BM_AxiomSuite)->RangeMultiplier(2)->Range(1, 16);

void BM_DivergenceTable(benchmark::State& state) {
  int depth = static_cast<int>(state.range(0));
  auto tower = DyadicTower::uniform(depth);
  auto branch = BranchChain::of(std::vector<int>(static_cast<std::size_t>(depth), 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_divergence(tower, branch, depth));
  }
}
BENCHMARK(BM_DivergenceTable)->DenseRange(4, 12, 2);

void BM_FreudenthalApprox(benchmark::State& state) {
  auto algebra = numbered_algebra(static_cast<std::size_t>(state.range(0)));
  auto f = seeded_function(algebra, 6);
  Rational eps = make_rational(1, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(freudenthal_approx(f, eps));
  }
}
BENCHMARK(BM_FreudenthalApprox)->Range(8, 4096);

void BM_FunctionRoundTrip(benchmark::State& state) {
  auto f = seeded_function(numbered_algebra(static_cast<std::size_t>(state.range(0))), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(io::parse_function(io::write_function(f)));
  }
}
BENCHMARK(BM_FunctionRoundTrip)->Range(8, 1024);

}  // namespace

BENCHMARK_MAIN();
