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

#include "condex/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "condex/error.hpp"
#include "condex/rational.hpp"

namespace condex::io {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    raise(Errc::ParseError, "input is not valid JSON");
  }
  return j;
}

/// Rejects keys outside `allowed` and requires every one of `required`.
void check_keys(const json& j, std::initializer_list<std::string_view> allowed,
                std::initializer_list<std::string_view> required,
                std::string_view what) {
  if (!j.is_object()) {
    raise(Errc::ParseError, std::string(what) + " must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      raise(Errc::ParseError, std::string(what) + " has unknown key \"" + key + "\"");
    }
  }
  for (std::string_view r : required) {
    if (!j.contains(r)) {
      raise(Errc::ParseError, std::string(what) + " is missing key \"" + std::string(r) + "\"");
    }
  }
}

std::string expect_string(const json& j, std::string_view what) {
  if (!j.is_string()) {
    raise(Errc::ParseError, std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

int expect_int(const json& j, std::string_view what) {
  if (!j.is_number_integer()) {
    raise(Errc::ParseError, std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

/// Rationals travel as strings so exactness survives the trip.
Rational expect_rational(const json& j, std::string_view what) {
  return parse_rational(expect_string(j, what));
}

json algebra_to_json(const AlgebraPtr& algebra) {
  json j;
  if (algebra->kind() == BooleanAlgebra::Kind::Finite) {
    j["kind"] = "finite";
    j["atoms"] = algebra->atoms();
  } else {
    j["kind"] = "dyadic";
    j["depth"] = algebra->dyadic_depth();
  }
  return j;
}

AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    raise(Errc::ParseError, "algebra must be an object with a \"kind\" key");
  }
  std::string kind = expect_string(j.at("kind"), "algebra kind");
  if (kind == "finite") {
    check_keys(j, {"kind", "atoms"}, {"kind", "atoms"}, "finite algebra");
    const json& atoms = j.at("atoms");
    if (!atoms.is_array()) {
      raise(Errc::ParseError, "algebra atoms must be an array");
    }
    std::vector<std::string> names;
    names.reserve(atoms.size());
    for (const json& name : atoms) {
      names.push_back(expect_string(name, "atom name"));
    }
    return BooleanAlgebra::finite(std::move(names));
  }
  if (kind == "dyadic") {
    check_keys(j, {"kind", "depth"}, {"kind", "depth"}, "dyadic algebra");
    return BooleanAlgebra::dyadic(expect_int(j.at("depth"), "algebra depth"));
  }
  raise(Errc::ParseError, "algebra kind must be \"finite\" or \"dyadic\", got \"" + kind + "\"");
}

json function_to_json(const SimpleFunction& f) {
  json values = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) {
    values[f.algebra()->atoms()[i]] = to_string(f[i]);
  }
  return json{{"algebra", algebra_to_json(f.algebra())}, {"values", std::move(values)}};
}

SimpleFunction function_from_json(const json& j) {
  check_keys(j, {"algebra", "values"}, {"algebra", "values"}, "function");
  AlgebraPtr algebra = algebra_from_json(j.at("algebra"));
  const json& values = j.at("values");
  if (!values.is_object()) {
    raise(Errc::ParseError, "function values must be an object");
  }
  for (const auto& [atom, value] : values.items()) {
    algebra->index_of(atom);  // UnknownAtom on strays
  }
  std::vector<Rational> dense;
  dense.reserve(algebra->atom_count());
  for (const std::string& atom : algebra->atoms()) {
    if (!values.contains(atom)) {
      raise(Errc::ParseError, "function is missing a value for atom \"" + atom + "\"");
    }
    dense.push_back(expect_rational(values.at(atom), "value of atom \"" + atom + "\""));
  }
  return SimpleFunction::from_values(std::move(algebra), std::move(dense));
}

json measure_to_json(const OrderFunctional& phi) {
  json weights = json::object();
  for (std::size_t i = 0; i < phi.weights().size(); ++i) {
    weights[phi.algebra()->atoms()[i]] = to_string(phi.weight_at(i));
  }
  return json{{"algebra", algebra_to_json(phi.algebra())}, {"weights", std::move(weights)}};
}

OrderFunctional measure_from_json(const json& j) {
  check_keys(j, {"algebra", "weights"}, {"algebra", "weights"}, "measure");
  AlgebraPtr algebra = algebra_from_json(j.at("algebra"));
  const json& weights = j.at("weights");
  if (!weights.is_object()) {
    raise(Errc::ParseError, "measure weights must be an object");
  }
  std::map<std::string, Rational> sparse;
  for (const auto& [atom, value] : weights.items()) {
    sparse[atom] = expect_rational(value, "weight of atom \"" + atom + "\"");
  }
  return OrderFunctional::from_map(std::move(algebra), sparse);
}

json operator_to_json(const CeOperator& op) {
  if (op.form() == CeOperator::Form::Duplicate) {
    return json{{"form", "duplicate"}, {"base", algebra_to_json(op.space().base)}};
  }
  json blocks = json::array();
  for (const ClopenSet& block : op.blocks()) {
    blocks.push_back(block.member_names());
  }
  return json{{"form", "partition"},
              {"blocks", std::move(blocks)},
              {"measure", measure_to_json(op.measure())}};
}

CeOperator operator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("form")) {
    raise(Errc::ParseError, "operator must be an object with a \"form\" key");
  }
  std::string form = expect_string(j.at("form"), "operator form");
  if (form == "duplicate") {
    check_keys(j, {"form", "base"}, {"form", "base"}, "duplicate operator");
    return CeOperator::duplicate(duplicate_space(algebra_from_json(j.at("base"))));
  }
  if (form == "partition") {
    check_keys(j, {"form", "blocks", "measure"}, {"form", "blocks", "measure"},
               "partition operator");
    OrderFunctional measure = measure_from_json(j.at("measure"));
    const json& blocks_json = j.at("blocks");
    if (!blocks_json.is_array()) {
      raise(Errc::ParseError, "operator blocks must be an array");
    }
    std::vector<ClopenSet> blocks;
    blocks.reserve(blocks_json.size());
    for (const json& block : blocks_json) {
      if (!block.is_array()) {
        raise(Errc::ParseError, "each operator block must be an array of atom names");
      }
      std::vector<std::string> members;
      members.reserve(block.size());
      for (const json& name : block) {
        members.push_back(expect_string(name, "block atom name"));
      }
      blocks.push_back(ClopenSet::of(measure.algebra(), members));
    }
    return CeOperator::partition_average(std::move(blocks), std::move(measure));
  }
  raise(Errc::ParseError,
        "operator form must be \"duplicate\" or \"partition\", got \"" + form + "\"");
}

json tower_to_json(const DyadicTower& tower) {
  json j;
  j["depth"] = tower.depth();
  if (tower.is_uniform()) {
    j["ratios"] = "uniform";
  } else {
    json ratios = json::object();
    for (const auto& [node, r] : tower.ratio_entries()) {
      ratios[node] = to_string(r);
    }
    j["ratios"] = std::move(ratios);
  }
  return j;
}

DyadicTower tower_from_json(const json& j) {
  check_keys(j, {"depth", "ratios"}, {"depth", "ratios"}, "tower");
  int depth = expect_int(j.at("depth"), "tower depth");
  const json& ratios = j.at("ratios");
  if (ratios.is_string()) {
    if (ratios.get<std::string>() != "uniform") {
      raise(Errc::ParseError, "tower ratios must be \"uniform\" or a node-to-ratio object");
    }
    return DyadicTower::uniform(depth);
  }
  if (!ratios.is_object()) {
    raise(Errc::ParseError, "tower ratios must be \"uniform\" or a node-to-ratio object");
  }
  std::map<std::string, Rational> entries;
  for (const auto& [node, value] : ratios.items()) {
    entries[node] = expect_rational(value, "ratio at node \"" + node + "\"");
  }
  return DyadicTower::from_ratios(depth, std::move(entries));
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

std::string write_algebra(const AlgebraPtr& algebra) { return dump(algebra_to_json(algebra)); }

AlgebraPtr parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

std::string write_function(const SimpleFunction& f) { return dump(function_to_json(f)); }

SimpleFunction parse_function(std::string_view text) {
  return function_from_json(parse_json(text));
}

std::vector<SimpleFunction> parse_function_list(std::string_view text) {
  json j = parse_json(text);
  std::vector<SimpleFunction> out;
  if (j.is_array()) {
    if (j.empty()) {
      raise(Errc::ParseError, "function list must not be empty");
    }
    out.reserve(j.size());
    for (const json& element : j) {
      out.push_back(function_from_json(element));
    }
    return out;
  }
  out.push_back(function_from_json(j));
  return out;
}

std::string write_measure(const OrderFunctional& phi) { return dump(measure_to_json(phi)); }

OrderFunctional parse_measure(std::string_view text) {
  return measure_from_json(parse_json(text));
}

std::string write_operator(const CeOperator& op) { return dump(operator_to_json(op)); }

CeOperator parse_operator(std::string_view text) {
  return operator_from_json(parse_json(text));
}

std::string write_tower(const DyadicTower& tower) { return dump(tower_to_json(tower)); }

DyadicTower parse_tower(std::string_view text) { return tower_from_json(parse_json(text)); }

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(Errc::FileNotFound, path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void save_text(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(Errc::FileNotFound, "cannot open \"" + path + "\" for writing");
  }
  out << content;
  if (!out) {
    raise(Errc::FileNotFound, "write to \"" + path + "\" failed");
  }
}

}  // namespace condex::io
