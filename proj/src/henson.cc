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

#include "qcsp/henson.h"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "qcsp/errors.h"

namespace qcsp {

Variable fresh_variable(const Instance& instance, const Variable& preferred) {
  const std::set<Variable> vars = instance.variables();
  Variable name = preferred;
  while (vars.count(name)) name += "_";
  return name;
}

Instance build_s_star(const Instance& instance, const RelationSymbol& edge, Variable* fresh) {
  const Variable x0 = fresh_variable(instance);
  Instance out = instance;
  out.add(Atom::rel(edge, {x0, x0}));
  for (const Variable& v : instance.variables()) out.add(Atom::neq(x0, v));
  for (const Atom& atom : out.atoms()) {
    assert(atom.kind() != AtomKind::kEq ||
           (atom.args()[0] != x0 && atom.args()[1] != x0));
    (void)atom;
  }
  if (fresh) *fresh = x0;
  return out;
}

SolveResult component_label_solve(const Instance& instance, const TournamentSet& forbidden) {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && (atom.symbol().name != "E" || atom.symbol().arity != 2)) {
      throw ContractError("loop-vertex henson theory cannot decide " + atom.str());
    }
  }
  CollapseResult collapsed = collapse_equalities(instance);
  if (collapsed.instance.has_self_disequality()) return SolveResult::unsat();

  std::set<Variable> var_set;
  for (const auto& [var, rep] : collapsed.var_map) var_set.insert(rep);
  const std::vector<Variable> vars(var_set.begin(), var_set.end());
  auto index_of = [&](const Variable& v) {
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) -
                                    vars.begin());
  };

  // Weak components: edges count regardless of direction.
  std::vector<std::size_t> parent(vars.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Atom& atom : collapsed.instance.atoms()) {
    if (atom.is_rel()) parent[find(index_of(atom.args()[0]))] = find(index_of(atom.args()[1]));
  }
  std::map<std::size_t, Instance> edges_of;
  for (std::size_t v = 0; v < vars.size(); ++v) edges_of[find(v)];
  for (const Atom& atom : collapsed.instance.atoms()) {
    if (atom.is_rel()) edges_of[find(index_of(atom.args()[0]))].add(atom);
  }
  std::set<std::size_t> labelled;
  for (const auto& [root, edges] : edges_of) {
    if (!henson_decide(edges, forbidden).sat()) labelled.insert(root);
  }
  for (const Atom& atom : collapsed.instance.atoms()) {
    if (atom.kind() == AtomKind::kNeq &&
        labelled.count(find(index_of(atom.args()[0]))) &&
        labelled.count(find(index_of(atom.args()[1])))) {
      return SolveResult::unsat();
    }
  }

  // Unlabelled components together have an injective Henson witness.
  Instance rest;
  for (const auto& [root, edges] : edges_of) {
    if (!labelled.count(root)) rest = rest.with(edges);
  }
  SolveResult inner = henson_decide(rest, forbidden);
  assert(inner.sat());
  Model model;
  model.arcs = inner.witness->arcs;
  std::map<Variable, int> vertex = inner.witness->values;
  int next = static_cast<int>(vertex.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (labelled.count(find(v))) {
      vertex[vars[v]] = kLoopVertex;
    } else if (!vertex.count(vars[v])) {
      vertex[vars[v]] = next++;
    }
  }
  for (const auto& [var, rep] : collapsed.var_map) model.values[var] = vertex.at(rep);
  return SolveResult::sat_with(std::move(model));
}

SolveResult HensonLoopSolver::decide(const Instance& instance) const {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && atom.symbol().theory_id != id_) {
      throw ContractError("theory " + id_ + " cannot decide " + atom.str());
    }
  }
  return component_label_solve(instance, forbidden_);
}

bool HensonLoopSolver::check_model(const Instance& instance, const Model& model) const {
  if (!is_henson_structure(model.arcs, forbidden_)) return false;
  for (const Atom& atom : instance.atoms()) {
    auto a = model.values.find(atom.args()[0]);
    auto b = model.values.find(atom.args()[1]);
    if (a == model.values.end() || b == model.values.end()) return false;
    switch (atom.kind()) {
      case AtomKind::kEq:
        if (a->second != b->second) return false;
        break;
      case AtomKind::kNeq:
        if (a->second == b->second) return false;
        break;
      case AtomKind::kRel: {
        const bool loop = a->second == kLoopVertex && b->second == kLoopVertex;
        const bool arc = a->second >= 0 && b->second >= 0 &&
                         model.arcs.count({a->second, b->second});
        if (!loop && !arc) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace qcsp
