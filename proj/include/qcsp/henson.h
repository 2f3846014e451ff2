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

// Reductions between a Henson digraph CSP and the combined CSP of
// (Henson digraph + loop vertex a) and (N; !=).

#ifndef QCSP_HENSON_H_
#define QCSP_HENSON_H_

#include <string>

#include "qcsp/digraph.h"
#include "qcsp/formulas.h"
#include "qcsp/theories.h"

namespace qcsp {

// Returns a variable name not occurring in `instance`, "x0" when free.
Variable fresh_variable(const Instance& instance, const Variable& preferred = "x0");

// S* = S + {E(x0,x0)} + {x0 != v : v in vars(S)} with x0 fresh; `edge` is the
// E symbol of the loop theory.
Instance build_s_star(const Instance& instance, const RelationSymbol& edge,
                      Variable* fresh = nullptr);

// Decides an instance over {E, =, !=} for the loop-vertex theory combined with
// (N; !=): collapse equalities, label every weakly connected component of the
// E-graph whose arcs have no Henson solution, reject iff a disequality joins
// two labelled components (or the same one). Labelled variables are mapped
// to kLoopVertex in the witness.
SolveResult component_label_solve(const Instance& instance, const TournamentSet& forbidden);

class HensonLoopSolver final : public TheorySolver {
 public:
  HensonLoopSolver(std::string theory_id, TournamentSet forbidden)
      : id_(std::move(theory_id)), forbidden_(std::move(forbidden)) {}
  TheoryKind kind() const override { return TheoryKind::kHensonLoop; }
  const std::string& theory_id() const override { return id_; }
  SolveResult decide(const Instance& instance) const override;
  bool check_model(const Instance& instance, const Model& model) const override;
  const TournamentSet& forbidden() const { return forbidden_; }

 private:
  std::string id_;
  TournamentSet forbidden_;
};

}  // namespace qcsp

#endif  // QCSP_HENSON_H_
