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

#include "qcsp/combined.h"

#include "qcsp/errors.h"
#include "qcsp/henson.h"

namespace qcsp {

std::shared_ptr<const TheorySolver> make_solver(const TheoryDecl& theory) {
  switch (theory.kind) {
    case TheoryKind::kEquality:
      return std::make_shared<EqualitySolver>(theory.id);
    case TheoryKind::kPointAlgebra:
      return std::make_shared<PointAlgebraSolver>(theory.id);
    case TheoryKind::kTemporal:
      return std::make_shared<TemporalSolver>(theory.id, theory.relation_table());
    case TheoryKind::kHenson:
      return std::make_shared<HensonSolver>(theory.id, theory.forbidden);
    case TheoryKind::kHensonLoop:
      return std::make_shared<HensonLoopSolver>(theory.id, theory.forbidden);
  }
  throw ContractError("unknown theory kind");
}

std::vector<std::string> CombinedProblem::theory_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, decl] : theories) ids.push_back(id);
  return ids;
}

CombinedProblem make_combined(const std::vector<TheoryDecl>& theories, Instance instance) {
  CombinedProblem problem;
  std::vector<std::string> ids;
  for (const TheoryDecl& t : theories) {
    ids.push_back(t.id);
    problem.theories[t.id] = t;
    problem.solvers[t.id] = make_solver(t);
    problem.convex_flags[t.id] = t.convex;
  }
  SignatureSplit split = split_by_signature(instance, ids);
  problem.parts = std::move(split.parts);
  problem.shared = std::move(split.shared);
  problem.instance = std::move(instance);
  return problem;
}

CombinedProblem make_combined(const Problem& problem) {
  return make_combined(problem.theories, problem.instance);
}

std::set<Variable> interface_variables(const std::map<std::string, Instance>& parts) {
  std::map<Variable, int> count;
  for (const auto& [tid, part] : parts) {
    for (const Variable& v : part.variables()) ++count[v];
  }
  std::set<Variable> out;
  for (const auto& [v, c] : count) {
    if (c >= 2) out.insert(v);
  }
  return out;
}

bool check_combined_witness(const CombinedProblem& problem, const CombinedResult& result) {
  if (!result.sat()) return false;
  for (const Variable& v : problem.instance.variables()) {
    if (!result.arrangement.count(v)) return false;
  }
  for (const Atom& atom : problem.instance.atoms()) {
    if (atom.is_rel()) continue;
    const bool same = result.arrangement.at(atom.args()[0]) ==
                      result.arrangement.at(atom.args()[1]);
    if (same != (atom.kind() == AtomKind::kEq)) return false;
  }
  for (const auto& [tid, part] : problem.parts) {
    auto it = result.models.find(tid);
    if (it == result.models.end()) {
      if (part.empty()) continue;
      return false;
    }
    const Model& model = it->second;
    if (!problem.solvers.at(tid)->check_model(part, model)) return false;
    const std::set<Variable> vars = part.variables();
    for (auto a = vars.begin(); a != vars.end(); ++a) {
      for (auto b = std::next(a); b != vars.end(); ++b) {
        const bool model_same = model.values.at(*a) == model.values.at(*b);
        const bool block_same = result.arrangement.at(*a) == result.arrangement.at(*b);
        if (model_same != block_same) return false;
      }
    }
  }
  return true;
}

}  // namespace qcsp
