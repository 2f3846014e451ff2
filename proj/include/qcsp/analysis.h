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

// Operational checks of structural properties of a single theory: refuting
// convexity with two disequalities, and verifying cross prevention formulas.

#ifndef QCSP_ANALYSIS_H_
#define QCSP_ANALYSIS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcsp/formulas.h"
#include "qcsp/problem.h"
#include "qcsp/theories.h"

namespace qcsp {

// Atom templates the probe draws from. Eq atoms are never generated.
struct Signature {
  std::vector<RelationSymbol> relations;
  bool with_neq = true;
};

Signature signature_of(const TheoryDecl& theory);

using VariablePair = std::pair<Variable, Variable>;

// S with S+{p1 distinct}, S+{p2 distinct} satisfiable but S+{both} not.
struct ConvexityWitness {
  Instance instance;
  VariablePair pair1, pair2;
  std::array<SolveResult, 3> verdicts;

  // Decides the three instances and throws ContractError unless they come
  // out SAT, SAT, UNSAT.
  static ConvexityWitness make(const TheorySolver& solver, Instance instance,
                               VariablePair pair1, VariablePair pair2);
};

struct ProbeMode {
  bool exhaustive = true;
  int count = 0;
  std::uint64_t seed = 0;

  static ProbeMode make_exhaustive() { return {}; }
  static ProbeMode make_random(int count, std::uint64_t seed) { return {false, count, seed}; }
};

inline constexpr int kExhaustiveMaxVars = 5;
inline constexpr int kExhaustiveMaxAtoms = 5;

// Bounded search for a convexity violation. Exhaustive mode walks instances
// by variable count, then atom sets in lexicographic order, then pairs, and
// reports the first violation; random mode draws `count` instances from a
// seeded generator. Absence of a witness proves nothing.
std::optional<ConvexityWitness> probe_convexity(const TheorySolver& solver,
                                                const Signature& signature, int max_vars,
                                                int max_atoms, const ProbeMode& mode);

struct ConditionCheck {
  Instance query;
  SolveResult result;
  bool holds = false;
};

struct CrossPreventionReport {
  PPFormula formula;
  ConditionCheck cond1;  // phi & x=y, injective on (x,u,v): satisfiable
  ConditionCheck cond2;  // phi & u=v, injective on (x,y,u): satisfiable
  ConditionCheck cond3;  // phi & x=y & u=v: unsatisfiable

  bool passes() const { return cond1.holds && cond2.holds && cond3.holds; }
};

// `formula.free_vars` must be exactly four distinct variables, read as
// (x, y, u, v). Throws ContractError otherwise.
CrossPreventionReport check_cross_prevention(const TheorySolver& solver,
                                             const PPFormula& formula);

}  // namespace qcsp

#endif  // QCSP_ANALYSIS_H_
