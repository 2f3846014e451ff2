// Copyright 2026 The qcsp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Core data model: relation symbols, atoms, instances and pp-formulas, plus
// the two structural rewrites every combination step relies on (equality
// collapse and signature splitting).

#ifndef QCSP_FORMULAS_H_
#define QCSP_FORMULAS_H_

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qcsp {

using Variable = std::string;

// [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view text);

struct RelationSymbol {
  std::string theory_id;
  std::string name;
  int arity = 0;

  auto operator<=>(const RelationSymbol&) const = default;
};

enum class AtomKind { kRel, kEq, kNeq };

// Eq and Neq atoms are stored with their two arguments sorted, so x=y and
// y=x are the same atom.
class Atom {
 public:
  static Atom rel(RelationSymbol symbol, std::vector<Variable> args);
  static Atom eq(Variable a, Variable b);
  static Atom neq(Variable a, Variable b);

  AtomKind kind() const { return kind_; }
  bool is_rel() const { return kind_ == AtomKind::kRel; }
  // Only meaningful for kRel.
  const RelationSymbol& symbol() const { return symbol_; }
  const std::vector<Variable>& args() const { return args_; }

  // Applies a variable substitution; variables missing from `map` are kept.
  Atom renamed(const std::map<Variable, Variable>& map) const;

  std::string str() const;

  auto operator<=>(const Atom&) const = default;

 private:
  Atom(AtomKind kind, RelationSymbol symbol, std::vector<Variable> args)
      : kind_(kind), symbol_(std::move(symbol)), args_(std::move(args)) {}

  AtomKind kind_ = AtomKind::kEq;
  RelationSymbol symbol_;
  std::vector<Variable> args_;
};

// A finite set of atoms. The variable set is derived from the atoms, so there
// are no phantom variables.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::set<Atom> atoms) : atoms_(std::move(atoms)) {}
  Instance(std::initializer_list<Atom> atoms) : atoms_(atoms) {}

  const std::set<Atom>& atoms() const { return atoms_; }
  std::set<Variable> variables() const;
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  void add(Atom atom) { atoms_.insert(std::move(atom)); }
  Instance with(Atom atom) const;
  Instance with(const Instance& other) const;
  Instance renamed(const std::map<Variable, Variable>& map) const;

  // True if some Neq atom has the same variable on both sides.
  bool has_self_disequality() const;
  bool has_eq_atoms() const;

  std::string str() const;

  bool operator==(const Instance&) const = default;

 private:
  std::set<Atom> atoms_;
};

// Existentially quantified conjunction: free_vars are the formula's
// parameters, everything else in the body is existential.
struct PPFormula {
  std::vector<Variable> free_vars;
  std::set<Variable> existential_vars;
  Instance body;

  // Derives the existential variables from the body; throws ContractError if
  // free_vars has duplicates or invalid names.
  static PPFormula make(std::vector<Variable> free_vars, Instance body);
};

struct CollapseResult {
  Instance instance;
  // Every variable of the input mapped to its class representative.
  std::map<Variable, Variable> var_map;
};

// Removes Eq atoms by substituting each equality class with its
// lexicographically least member. Neq(v,v) produced this way is kept.
CollapseResult collapse_equalities(const Instance& instance);

struct SignatureSplit {
  std::map<std::string, Instance> parts;
  // Variables occurring in Rel atoms of at least two distinct theories.
  std::set<Variable> shared;
};

// Routes Rel atoms to their theory and copies Eq/Neq atoms into every part.
// Throws ContractError for a Rel atom whose theory is not listed.
SignatureSplit split_by_signature(const Instance& instance,
                                  const std::vector<std::string>& theories);

}  // namespace qcsp

#endif  // QCSP_FORMULAS_H_
