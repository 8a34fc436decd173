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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "condex/boolean_algebra.hpp"
#include "condex/cond_expectation.hpp"
#include "condex/error.hpp"
#include "condex/functional.hpp"
#include "condex/io.hpp"
#include "condex/rational.hpp"
#include "condex/rng.hpp"
#include "condex/selftest.hpp"
#include "condex/simple_function.hpp"
#include "condex/witness.hpp"

namespace condex::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(std::move(current));
  return parts;
}

int run_algebra(const std::string& kind, bool atoms_given, const std::string& atoms,
                bool depth_given, int depth, const std::string& out_path) {
  AlgebraPtr algebra;
  if (kind == "finite") {
    if (!atoms_given) {
      throw std::invalid_argument("--atoms is required for --kind finite");
    }
    if (depth_given) {
      throw std::invalid_argument("--depth applies to --kind dyadic only");
    }
    algebra = BooleanAlgebra::finite(split_commas(atoms));
  } else {
    if (!depth_given) {
      throw std::invalid_argument("--depth is required for --kind dyadic");
    }
    if (atoms_given) {
      throw std::invalid_argument("--atoms applies to --kind finite only");
    }
    algebra = BooleanAlgebra::dyadic(depth);
  }
  io::save_text(out_path, io::write_algebra(algebra));
  return 0;
}

int run_fn(const std::string& algebra_path, const std::string& values_path,
           const std::string& op, bool eps_given, const std::string& eps_text,
           const std::string& out_path) {
  AlgebraPtr algebra = io::parse_algebra(io::load_text(algebra_path));
  std::vector<SimpleFunction> operands = io::parse_function_list(io::load_text(values_path));
  for (const SimpleFunction& f : operands) {
    if (!same_algebra(f.algebra(), algebra)) {
      raise(Errc::AlgebraMismatch,
            "values file algebra differs from the --algebra file");
    }
  }
  const bool unary = op == "abs" || op == "freudenthal";
  if (unary && operands.size() != 1) {
    throw std::invalid_argument("--op " + op + " takes exactly one function, got " +
                                std::to_string(operands.size()));
  }
  if (!unary && operands.size() < 2) {
    throw std::invalid_argument("--op " + op + " takes at least two functions, got " +
                                std::to_string(operands.size()));
  }
  if (eps_given && op != "freudenthal") {
    throw std::invalid_argument("--eps applies to --op freudenthal only");
  }

  SimpleFunction result = operands.front();
  if (op == "abs") {
    result = abs(result);
  } else if (op == "freudenthal") {
    if (!eps_given) {
      throw std::invalid_argument("--op freudenthal requires --eps");
    }
    result = freudenthal_approx(result, parse_rational(eps_text));
  } else {
    for (std::size_t i = 1; i < operands.size(); ++i) {
      if (op == "sup") {
        result = sup(result, operands[i]);
      } else if (op == "inf") {
        result = inf(result, operands[i]);
      } else if (op == "add") {
        result = result + operands[i];
      } else {
        result = result * operands[i];
      }
    }
  }
  io::save_text(out_path, io::write_function(result));
  return 0;
}

int run_ce_apply(const std::string& operator_path, const std::string& fn_path,
                 const std::string& out_path) {
  CeOperator op = io::parse_operator(io::load_text(operator_path));
  SimpleFunction f = io::parse_function(io::load_text(fn_path));
  io::save_text(out_path, io::write_function(op.apply(f)));
  return 0;
}

int run_ce_check(std::ostream& out, const std::string& operator_path, int trials,
                 std::uint64_t seed) {
  CeOperator op = io::parse_operator(io::load_text(operator_path));
  AxiomReport report = check_ce_axioms(op, trials, seed);
  for (const AxiomVerdict& v : report.verdicts) {
    out << std::left << std::setw(18) << v.axiom << std::right << std::setw(6) << v.trials
        << "  " << (v.passed ? "PASS" : "FAIL");
    if (!v.passed) {
      out << "  " << v.counterexample;
    }
    out << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int run_split(std::ostream& out, const std::string& measure_path) {
  OrderFunctional phi = io::parse_measure(io::load_text(measure_path));
  auto [k1, k2] = phi.positive_split();
  out << "K1 = " << to_string(k1) << "\n";
  out << "K2 = " << to_string(k2) << "\n";
  out << "phi(K1) = " << to_string(phi.measure_of(k1)) << "\n";
  out << "phi(K2) = " << to_string(phi.measure_of(k2)) << "\n";
  return 0;
}

int run_witness(std::ostream& out, const std::string& tower_arg, int depth,
                const std::string& branch_bits, int upto) {
  DyadicTower tower = tower_arg == "uniform"
                          ? DyadicTower::uniform(depth)
                          : io::parse_tower(io::load_text(tower_arg));
  if (tower.depth() != depth) {
    throw std::invalid_argument("--depth " + std::to_string(depth) +
                                " does not match the tower depth " +
                                std::to_string(tower.depth()));
  }
  BranchChain branch = BranchChain::parse(branch_bits);
  for (const auto& [n, value] : verify_divergence(tower, branch, upto)) {
    out << "(" << n << ", " << to_string(value) << ")\n";
  }
  return 0;
}

int run_selftest_verb(std::ostream& out, std::uint64_t seed) {
  std::vector<SuiteResult> results = run_selftest(seed);
  long passed = 0;
  for (const SuiteResult& r : results) {
    out << std::left << std::setw(28) << r.name << std::right << std::setw(8) << r.checks
        << " checks  " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (r.passed()) {
      ++passed;
    } else {
      out << "    first failure: " << r.detail << "\n";
    }
  }
  out << results.size() << " suites, " << passed << " passed, "
      << (static_cast<long>(results.size()) - passed) << " failed\n";
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"conditional expectation operators on finite Stone spaces"};
  app.require_subcommand(1);

  auto* algebra_cmd = app.add_subcommand("algebra", "build an algebra file");
  std::string algebra_kind;
  std::string algebra_atoms;
  int algebra_depth = 0;
  std::string algebra_out;
  algebra_cmd->add_option("--kind", algebra_kind)
      ->required()
      ->check(CLI::IsMember({"finite", "dyadic"}));
  auto* atoms_opt = algebra_cmd->add_option("--atoms", algebra_atoms);
  auto* depth_opt = algebra_cmd->add_option("--depth", algebra_depth);
  algebra_cmd->add_option("--out", algebra_out)->required();

  auto* fn_cmd = app.add_subcommand("fn", "combine or transform functions");
  std::string fn_algebra;
  std::string fn_values;
  std::string fn_op;
  std::string fn_eps;
  std::string fn_out;
  fn_cmd->add_option("--algebra", fn_algebra)->required();
  fn_cmd->add_option("--values", fn_values)->required();
  fn_cmd->add_option("--op", fn_op)
      ->required()
      ->check(CLI::IsMember({"sup", "inf", "add", "mul", "abs", "freudenthal"}));
  auto* eps_opt = fn_cmd->add_option("--eps", fn_eps);
  fn_cmd->add_option("--out", fn_out)->required();

  auto* ce_apply_cmd = app.add_subcommand("ce-apply", "apply an operator to a function");
  std::string apply_operator;
  std::string apply_fn;
  std::string apply_out;
  ce_apply_cmd->add_option("--operator", apply_operator)->required();
  ce_apply_cmd->add_option("--fn", apply_fn)->required();
  ce_apply_cmd->add_option("--out", apply_out)->required();

  auto* ce_check_cmd = app.add_subcommand("ce-check", "verify the operator axioms");
  std::string check_operator;
  int check_trials = 0;
  std::uint64_t check_seed = kDefaultSeed;
  ce_check_cmd->add_option("--operator", check_operator)->required();
  ce_check_cmd->add_option("--trials", check_trials)->required();
  ce_check_cmd->add_option("--seed", check_seed);

  auto* split_cmd = app.add_subcommand("split", "split a measure into two positive parts");
  std::string split_measure;
  split_cmd->add_option("--measure", split_measure)->required();

  auto* witness_cmd = app.add_subcommand("witness", "tabulate the divergence construction");
  std::string witness_tower;
  int witness_depth = 0;
  std::string witness_branch;
  int witness_upto = 0;
  witness_cmd->add_option("--tower", witness_tower)->required();
  witness_cmd->add_option("--depth", witness_depth)->required();
  witness_cmd->add_option("--branch", witness_branch)->required();
  witness_cmd->add_option("--upto", witness_upto)->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "run every invariant suite");
  std::uint64_t selftest_seed = kDefaultSeed;
  selftest_cmd->add_option("--seed", selftest_seed);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (algebra_cmd->parsed()) {
      return run_algebra(algebra_kind, atoms_opt->count() > 0, algebra_atoms,
                         depth_opt->count() > 0, algebra_depth, algebra_out);
    }
    if (fn_cmd->parsed()) {
      return run_fn(fn_algebra, fn_values, fn_op, eps_opt->count() > 0, fn_eps, fn_out);
    }
    if (ce_apply_cmd->parsed()) {
      return run_ce_apply(apply_operator, apply_fn, apply_out);
    }
    if (ce_check_cmd->parsed()) {
      return run_ce_check(out, check_operator, check_trials, check_seed);
    }
    if (split_cmd->parsed()) {
      return run_split(out, split_measure);
    }
    if (witness_cmd->parsed()) {
      return run_witness(out, witness_tower, witness_depth, witness_branch, witness_upto);
    }
    return run_selftest_verb(out, selftest_seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == Errc::VerificationFailure ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace condex::cli
