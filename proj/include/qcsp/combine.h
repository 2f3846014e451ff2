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

// Nelson-Oppen style combination. Both modes decide the combined CSP of all
// declared theories; convex mode is equality propagation to a fixpoint,
// complete mode additionally branches on equalities between interface
// variables.

#ifndef QCSP_COMBINE_H_
#define QCSP_COMBINE_H_

#include <set>
#include <string_view>

#include "qcsp/combined.h"

namespace qcsp {

enum class Mode { kAuto, kConvex, kComplete };

std::string_view to_string(Mode mode);

struct SolveOptions {
  // Explore arrangement-search subtrees with OpenMP. The verdict and the
  // reported witness are the same as in the serial search.
  bool parallel = false;
  // Try u=v before u!=v when branching. Flipping it changes only which
  // witness is found first.
  bool eq_first = true;
};

// Equalities between interface variables of the current instance (the
// problem's instance with `learned` applied by substitution) entailed by
// some single part. Empty at a fixpoint.
std::set<Atom> propagate_step(const CombinedProblem& problem, const std::set<Atom>& learned);

// Throws ConvexityNotDeclared if some theory is not flagged convex, or if a
// flagged theory refuses the all-distinct arrangement at the fixpoint.
CombinedResult solve_convex(const CombinedProblem& problem);
CombinedResult solve_complete(const CombinedProblem& problem, const SolveOptions& options = {});
CombinedResult solve_auto(const CombinedProblem& problem, const SolveOptions& options = {});
CombinedResult solve(const CombinedProblem& problem, Mode mode, const SolveOptions& options = {});

}  // namespace qcsp

#endif  // QCSP_COMBINE_H_
