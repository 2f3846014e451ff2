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

#include <algorithm>

#include "qcsp/errors.h"
#include "qcsp/theories.h"

namespace qcsp {

bool entails_eq(const TheorySolver& solver, const Instance& instance,
                const Variable& x, const Variable& y) {
  return !solver.decide(instance.with(Atom::neq(x, y))).sat();
}

SolveResult eq_decide(const Instance& instance) {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel()) {
      throw ContractError("equality theory cannot decide " + atom.str());
    }
  }
  CollapseResult collapsed = collapse_equalities(instance);
  if (collapsed.instance.has_self_disequality()) return SolveResult::unsat();
  // Representatives are least members; number classes in that order.
  std::map<Variable, int> block_of_rep;
  for (const auto& [var, rep] : collapsed.var_map) block_of_rep.emplace(rep, 0);
  int next = 0;
  for (auto& [rep, block] : block_of_rep) block = next++;
  Model model;
  for (const auto& [var, rep] : collapsed.var_map) model.values[var] = block_of_rep[rep];
  return SolveResult::sat_with(std::move(model));
}

SolveResult EqualitySolver::decide(const Instance& instance) const {
  return eq_decide(instance);
}

bool EqualitySolver::check_model(const Instance& instance, const Model& model) const {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel()) return false;
    auto a = model.values.find(atom.args()[0]);
    auto b = model.values.find(atom.args()[1]);
    if (a == model.values.end() || b == model.values.end()) return false;
    if ((atom.kind() == AtomKind::kEq) != (a->second == b->second)) return false;
  }
  return model.arcs.empty();
}

}  // namespace qcsp
