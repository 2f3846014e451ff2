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

#include "qcsp/formulas.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qcsp/errors.h"

namespace qcsp {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (std::isdigit(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin(), text.end(), word);
}

Atom Atom::rel(RelationSymbol symbol, std::vector<Variable> args) {
  if (symbol.arity < 1) {
    throw ContractError("relation " + symbol.name + " has arity < 1");
  }
  if (static_cast<int>(args.size()) != symbol.arity) {
    throw ContractError("relation " + symbol.theory_id + "." + symbol.name +
                        " expects " + std::to_string(symbol.arity) +
                        " arguments, got " + std::to_string(args.size()));
  }
  return Atom(AtomKind::kRel, std::move(symbol), std::move(args));
}

Atom Atom::eq(Variable a, Variable b) {
  if (b < a) std::swap(a, b);
  return Atom(AtomKind::kEq, {}, {std::move(a), std::move(b)});
}

Atom Atom::neq(Variable a, Variable b) {
  if (b < a) std::swap(a, b);
  return Atom(AtomKind::kNeq, {}, {std::move(a), std::move(b)});
}

Atom Atom::renamed(const std::map<Variable, Variable>& map) const {
  std::vector<Variable> args = args_;
  for (Variable& v : args) {
    auto it = map.find(v);
    if (it != map.end()) v = it->second;
  }
  switch (kind_) {
    case AtomKind::kRel:
      return Atom(kind_, symbol_, std::move(args));
    case AtomKind::kEq:
      return eq(std::move(args[0]), std::move(args[1]));
    case AtomKind::kNeq:
      return neq(std::move(args[0]), std::move(args[1]));
  }
  return *this;
}

std::string Atom::str() const {
  std::ostringstream out;
  switch (kind_) {
    case AtomKind::kRel:
      out << symbol_.theory_id << "." << symbol_.name << "(";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        out << (i ? "," : "") << args_[i];
      }
      out << ")";
      break;
    case AtomKind::kEq:
      out << args_[0] << "=" << args_[1];
      break;
    case AtomKind::kNeq:
      out << args_[0] << "!=" << args_[1];
      break;
  }
  return out.str();
}

std::set<Variable> Instance::variables() const {
  std::set<Variable> vars;
  for (const Atom& atom : atoms_) vars.insert(atom.args().begin(), atom.args().end());
  return vars;
}

Instance Instance::with(Atom atom) const {
  Instance out = *this;
  out.add(std::move(atom));
  return out;
}

Instance Instance::with(const Instance& other) const {
  Instance out = *this;
  out.atoms_.insert(other.atoms_.begin(), other.atoms_.end());
  return out;
}

Instance Instance::renamed(const std::map<Variable, Variable>& map) const {
  Instance out;
  for (const Atom& atom : atoms_) out.add(atom.renamed(map));
  return out;
}

bool Instance::has_self_disequality() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const Atom& a) {
    return a.kind() == AtomKind::kNeq && a.args()[0] == a.args()[1];
  });
}

bool Instance::has_eq_atoms() const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.kind() == AtomKind::kEq; });
}

std::string Instance::str() const {
  std::string out = "{";
  bool first = true;
  for (const Atom& atom : atoms_) {
    if (!first) out += ", ";
    out += atom.str();
    first = false;
  }
  return out + "}";
}

PPFormula PPFormula::make(std::vector<Variable> free_vars, Instance body) {
  std::set<Variable> free(free_vars.begin(), free_vars.end());
  if (free.size() != free_vars.size()) {
    throw ContractError("duplicate free variable in pp-formula");
  }
  for (const Variable& v : free_vars) {
    if (!is_identifier(v)) throw ContractError("invalid variable name '" + v + "'");
  }
  PPFormula formula;
  for (const Variable& v : body.variables()) {
    if (!free.count(v)) formula.existential_vars.insert(v);
  }
  formula.free_vars = std::move(free_vars);
  formula.body = std::move(body);
  return formula;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as root; indices follow sorted variable names.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CollapseResult collapse_equalities(const Instance& instance) {
  const std::set<Variable> vars = instance.variables();
  const std::vector<Variable> names(vars.begin(), vars.end());
  auto index_of = [&](const Variable& v) {
    return static_cast<std::size_t>(
        std::lower_bound(names.begin(), names.end(), v) - names.begin());
  };
  UnionFind classes(names.size());
  for (const Atom& atom : instance.atoms()) {
    if (atom.kind() == AtomKind::kEq) {
      classes.unite(index_of(atom.args()[0]), index_of(atom.args()[1]));
    }
  }
  CollapseResult result;
  for (std::size_t i = 0; i < names.size(); ++i) {
    result.var_map[names[i]] = names[classes.find(i)];
  }
  for (const Atom& atom : instance.atoms()) {
    if (atom.kind() == AtomKind::kEq) continue;
    result.instance.add(atom.renamed(result.var_map));
  }
  return result;
}

SignatureSplit split_by_signature(const Instance& instance,
                                  const std::vector<std::string>& theories) {
  SignatureSplit split;
  for (const std::string& tid : theories) split.parts[tid];
  std::map<Variable, std::set<std::string>> homes;
  for (const Atom& atom : instance.atoms()) {
    if (!atom.is_rel()) {
      for (auto& [tid, part] : split.parts) part.add(atom);
      continue;
    }
    auto it = split.parts.find(atom.symbol().theory_id);
    if (it == split.parts.end()) {
      throw ContractError("atom " + atom.str() + " belongs to undeclared theory");
    }
    it->second.add(atom);
    for (const Variable& v : atom.args()) homes[v].insert(atom.symbol().theory_id);
  }
  for (const auto& [v, tids] : homes) {
    if (tids.size() >= 2) split.shared.insert(v);
  }
  return split;
}

}  // namespace qcsp
