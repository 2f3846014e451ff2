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

// Problem-level types shared by the combination engine and the brute-force
// oracle.

#ifndef QCSP_COMBINED_H_
#define QCSP_COMBINED_H_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qcsp/formulas.h"
#include "qcsp/problem.h"
#include "qcsp/theories.h"

namespace qcsp {

std::shared_ptr<const TheorySolver> make_solver(const TheoryDecl& theory);

struct CombinedProblem {
  Instance instance;
  std::map<std::string, Instance> parts;
  std::set<Variable> shared;
  std::map<std::string, std::shared_ptr<const TheorySolver>> solvers;
  std::map<std::string, bool> convex_flags;
  std::map<std::string, TheoryDecl> theories;

  std::vector<std::string> theory_ids() const;
};

CombinedProblem make_combined(const Problem& problem);
CombinedProblem make_combined(const std::vector<TheoryDecl>& theories, Instance instance);

// Variables occurring in at least two parts. Because Eq/Neq atoms are copied
// into every part, this is `shared` plus the variables of Eq/Neq atoms
// whenever two or more theories are present.
std::set<Variable> interface_variables(const std::map<std::string, Instance>& parts);

struct CombinedResult {
  Verdict verdict = Verdict::kUnsat;
  // Equality classes over every variable of the instance (block indices).
  std::map<Variable, int> arrangement;
  // One model per theory over the variables of that theory's part.
  std::map<std::string, Model> models;

  bool sat() const { return verdict == Verdict::kSat; }
};

// End-to-end replay of a SAT result against the problem's own instance: the
// arrangement satisfies every Eq/Neq atom, each theory model passes its
// solver's check on the theory's part, and each model's equalities coincide
// with the arrangement on that part's variables.
bool check_combined_witness(const CombinedProblem& problem, const CombinedResult& result);

}  // namespace qcsp

#endif  // QCSP_COMBINED_H_
