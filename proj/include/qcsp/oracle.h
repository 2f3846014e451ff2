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

// Brute-force ground truth. Nothing here shares decision logic with the
// solvers: theories are decided by enumerating finite models, and combined
// problems by enumerating every equality pattern of all variables.

#ifndef QCSP_ORACLE_H_
#define QCSP_ORACLE_H_

#include <vector>

#include "qcsp/combined.h"
#include "qcsp/order_types.h"
#include "qcsp/problem.h"
#include "qcsp/theories.h"

namespace qcsp {

inline constexpr int kMaxWeakOrderSize = 8;
inline constexpr int kMaxPartitionSize = 10;
inline constexpr int kDefaultOracleBound = 8;

// Every weak order on n positions, in lexicographic rank-list order.
// Throws BoundError for n > kMaxWeakOrderSize.
std::vector<WeakOrder> enumerate_weak_orders(int n);

// Every set partition of {0..n-1} as a restricted growth string.
// Throws BoundError for n > kMaxPartitionSize.
std::vector<std::vector<int>> enumerate_partitions(int n);

// Set partitions of a ground set in restricted-growth-string order: element
// i lives in block rgs()[i], and rgs()[i] <= 1 + max(rgs()[0..i-1]).
class PartitionIterator {
 public:
  explicit PartitionIterator(std::vector<Variable> ground_set);

  const std::vector<Variable>& ground_set() const { return ground_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int block_count() const;
  std::vector<std::vector<Variable>> blocks() const;
  bool next();

 private:
  std::vector<Variable> ground_;
  std::vector<int> rgs_;
};

// Variable limit for the oracle; QCSP_ORACLE_BOUND overrides the default.
int oracle_variable_bound();

struct BruteOptions {
  // Only assignments that send distinct variables to distinct elements.
  bool injective = false;
  // Skip henson completions whose fixed arcs already contain a forbidden
  // tournament (adding arcs to an oriented graph never removes a copy).
  bool prune_completions = true;
  // <= 0 means oracle_variable_bound().
  int max_vars = 0;
};

SolveResult brute_decide_theory(const TheoryDecl& theory, const Instance& instance,
                                const BruteOptions& options = {});

struct OracleOptions {
  bool parallel = false;
  int max_vars = 0;
};

// SAT iff some partition of all variables, consistent with the Eq/Neq atoms,
// makes every collapsed part satisfiable with pairwise-distinct values.
CombinedResult superpose_bruteforce(const CombinedProblem& problem,
                                    const OracleOptions& options = {});

}  // namespace qcsp

#endif  // QCSP_ORACLE_H_
