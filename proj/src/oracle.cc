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

#include "qcsp/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>

#include "qcsp/errors.h"

namespace qcsp {

std::vector<WeakOrder> enumerate_weak_orders(int n) {
  if (n < 0 || n > kMaxWeakOrderSize) {
    throw BoundError("weak-order enumeration supports n <= " +
                     std::to_string(kMaxWeakOrderSize) + ", got " + std::to_string(n));
  }
  std::vector<WeakOrder> out;
  WeakOrderCursor cursor(n);
  do {
    out.emplace_back(cursor.ranks());
  } while (cursor.next());
  return out;
}

std::vector<std::vector<int>> enumerate_partitions(int n) {
  if (n < 0 || n > kMaxPartitionSize) {
    throw BoundError("partition enumeration supports n <= " +
                     std::to_string(kMaxPartitionSize) + ", got " + std::to_string(n));
  }
  std::vector<Variable> ground;
  for (int i = 0; i < n; ++i) ground.push_back("v" + std::to_string(i));
  std::vector<std::vector<int>> out;
  PartitionIterator it(std::move(ground));
  do {
    out.push_back(it.rgs());
  } while (it.next());
  return out;
}

PartitionIterator::PartitionIterator(std::vector<Variable> ground_set)
    : ground_(std::move(ground_set)), rgs_(ground_.size(), 0) {
  if (ground_.size() > static_cast<std::size_t>(kMaxPartitionSize)) {
    throw BoundError("partition enumeration supports at most " +
                     std::to_string(kMaxPartitionSize) + " elements");
  }
}

int PartitionIterator::block_count() const {
  return rgs_.empty() ? 0 : 1 + *std::max_element(rgs_.begin(), rgs_.end());
}

std::vector<std::vector<Variable>> PartitionIterator::blocks() const {
  std::vector<std::vector<Variable>> out(static_cast<std::size_t>(block_count()));
  for (std::size_t i = 0; i < ground_.size(); ++i) out[rgs_[i]].push_back(ground_[i]);
  return out;
}

bool PartitionIterator::next() {
  for (std::size_t i = rgs_.size(); i-- > 1;) {
    const int prefix_max = *std::max_element(rgs_.begin(), rgs_.begin() + i);
    if (rgs_[i] <= prefix_max) {
      ++rgs_[i];
      std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
      return true;
    }
  }
  return false;
}

int oracle_variable_bound() {
  if (const char* env = std::getenv("QCSP_ORACLE_BOUND")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 64) return static_cast<int>(value);
  }
  return kDefaultOracleBound;
}

namespace {

int resolve_bound(int requested) { return requested > 0 ? requested : oracle_variable_bound(); }

struct Indexed {
  std::vector<Variable> vars;
  int index(const Variable& v) const {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  }
};

Indexed index_variables(const Instance& instance) {
  const std::set<Variable> vars = instance.variables();
  return Indexed{{vars.begin(), vars.end()}};
}

bool eq_neq_hold(const Instance& instance, const Indexed& ix, const std::vector<int>& value) {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel()) continue;
    const bool same = value[ix.index(atom.args()[0])] == value[ix.index(atom.args()[1])];
    if (same != (atom.kind() == AtomKind::kEq)) return false;
  }
  return true;
}

Model model_from(const Indexed& ix, const std::vector<int>& value) {
  Model model;
  for (std::size_t i = 0; i < ix.vars.size(); ++i) model.values[ix.vars[i]] = value[i];
  return model;
}

SolveResult brute_equality(const Instance& instance, const Indexed& ix, bool injective) {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel()) throw ContractError("equality oracle cannot evaluate " + atom.str());
  }
  if (injective) {
    std::vector<int> value(ix.vars.size());
    std::iota(value.begin(), value.end(), 0);
    if (!eq_neq_hold(instance, ix, value)) return SolveResult::unsat();
    return SolveResult::sat_with(model_from(ix, value));
  }
  PartitionIterator it(ix.vars);
  do {
    if (eq_neq_hold(instance, ix, it.rgs())) {
      return SolveResult::sat_with(model_from(ix, it.rgs()));
    }
  } while (it.next());
  return SolveResult::unsat();
}

// Rank-valued evaluation of order atoms. Point-algebra atoms are evaluated
// arithmetically; other relations by order-type membership.
bool order_atoms_hold(const Instance& instance, const Indexed& ix, const RelationTable& table,
                      bool point_algebra, const std::vector<int>& rank) {
  for (const Atom& atom : instance.atoms()) {
    std::vector<int> vals;
    for (const Variable& v : atom.args()) vals.push_back(rank[ix.index(v)]);
    switch (atom.kind()) {
      case AtomKind::kEq:
        if (vals[0] != vals[1]) return false;
        break;
      case AtomKind::kNeq:
        if (vals[0] == vals[1]) return false;
        break;
      case AtomKind::kRel: {
        const std::string& name = atom.symbol().name;
        if (point_algebra) {
          if (name == "lt" && !(vals[0] < vals[1])) return false;
          if (name == "leq" && !(vals[0] <= vals[1])) return false;
          break;
        }
        auto it = table.find(name);
        if (it == table.end()) throw ContractError("oracle: unknown relation " + atom.str());
        if (!it->second.contains(WeakOrder::of(std::span<const int>(vals)))) return false;
        break;
      }
    }
  }
  return true;
}

SolveResult brute_order(const TheoryDecl& theory, const Instance& instance, const Indexed& ix,
                        bool injective) {
  const bool point_algebra = theory.kind == TheoryKind::kPointAlgebra;
  for (const Atom& atom : instance.atoms()) {
    if (!atom.is_rel()) continue;
    if (point_algebra && atom.symbol().name != "lt" && atom.symbol().name != "leq") {
      throw ContractError("point algebra oracle cannot evaluate " + atom.str());
    }
  }
  const RelationTable table = theory.relation_table();
  const int n = static_cast<int>(ix.vars.size());
  if (injective) {
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    do {
      if (order_atoms_hold(instance, ix, table, point_algebra, rank)) {
        return SolveResult::sat_with(model_from(ix, rank));
      }
    } while (std::next_permutation(rank.begin(), rank.end()));
    return SolveResult::unsat();
  }
  if (n > kMaxWeakOrderSize) throw BoundError("oracle: too many variables for weak orders");
  WeakOrderCursor cursor(n);
  do {
    if (order_atoms_hold(instance, ix, table, point_algebra, cursor.ranks())) {
      return SolveResult::sat_with(model_from(ix, cursor.ranks()));
    }
  } while (cursor.next());
  return SolveResult::unsat();
}

// Copy check over all ordered tuples of distinct host vertices.
bool contains_tournament(const std::vector<std::vector<char>>& adj, const Digraph& pattern) {
  const int n = static_cast<int>(adj.size());
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> chosen;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) chosen.push_back(i);
    }
    do {
      bool match = true;
      for (const auto& [a, b] : pattern.arcs) {
        if (!adj[chosen[a]][chosen[b]] || adj[chosen[b]][chosen[a]]) {
          match = false;
          break;
        }
      }
      if (match) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

class HensonCompletion {
 public:
  HensonCompletion(const TournamentSet& forbidden, bool prune)
      : forbidden_(forbidden), prune_(prune) {}

  // Searches oriented supersets of `fixed` over m vertices that omit every
  // forbidden tournament. Returns the first one found.
  std::optional<std::set<Arc>> run(int m, const std::set<Arc>& fixed) {
    adj_.assign(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    free_.clear();
    for (const auto& [u, v] : fixed) adj_[u][v] = 1;
    for (int u = 0; u < m; ++u) {
      for (int v = u + 1; v < m; ++v) {
        if (adj_[u][v] && adj_[v][u]) return std::nullopt;
        if (!adj_[u][v] && !adj_[v][u]) free_.push_back({u, v});
      }
    }
    if (dfs(0)) {
      std::set<Arc> arcs;
      for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
          if (adj_[u][v]) arcs.insert({u, v});
        }
      }
      return arcs;
    }
    return std::nullopt;
  }

 private:
  bool omits() const {
    for (const Digraph& f : forbidden_) {
      if (contains_tournament(adj_, f)) return false;
    }
    return true;
  }

  bool dfs(std::size_t i) {
    if (prune_ && !omits()) return false;
    if (i == free_.size()) return omits();
    const auto [u, v] = free_[i];
    if (dfs(i + 1)) return true;
    adj_[u][v] = 1;
    if (dfs(i + 1)) return true;
    adj_[u][v] = 0;
    adj_[v][u] = 1;
    if (dfs(i + 1)) return true;
    adj_[v][u] = 0;
    return false;
  }

  const TournamentSet& forbidden_;
  bool prune_;
  std::vector<std::vector<char>> adj_;
  std::vector<Arc> free_;
};

SolveResult brute_henson(const TheoryDecl& theory, const Instance& instance, const Indexed& ix,
                         const BruteOptions& options) {
  const bool with_loop = theory.kind == TheoryKind::kHensonLoop;
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && atom.symbol().name != "E") {
      throw ContractError("henson oracle cannot evaluate " + atom.str());
    }
  }
  HensonCompletion completion(theory.forbidden, options.prune_completions);
  const int n = static_cast<int>(ix.vars.size());
  PartitionIterator it(ix.vars);
  do {
    const std::vector<int>& block = it.rgs();
    if (options.injective && it.block_count() != n) continue;
    if (!eq_neq_hold(instance, ix, block)) continue;
    const int blocks = it.block_count();
    // loop == -1: no block is sent to the loop vertex.
    for (int loop = -1; loop < (with_loop ? blocks : 0); ++loop) {
      std::vector<int> vertex(static_cast<std::size_t>(blocks), kLoopVertex);
      int m = 0;
      for (int b = 0; b < blocks; ++b) {
        if (b != loop) vertex[b] = m++;
      }
      std::set<Arc> fixed;
      bool ok = true;
      for (const Atom& atom : instance.atoms()) {
        if (!atom.is_rel()) continue;
        const int u = vertex[block[ix.index(atom.args()[0])]];
        const int v = vertex[block[ix.index(atom.args()[1])]];
        if (u == kLoopVertex || v == kLoopVertex) {
          ok = u == v;
        } else {
          ok = u != v;
          fixed.insert({u, v});
        }
        if (!ok) break;
      }
      if (!ok) continue;
      std::optional<std::set<Arc>> arcs = completion.run(m, fixed);
      if (!arcs) continue;
      Model model;
      for (int i = 0; i < n; ++i) model.values[ix.vars[i]] = vertex[block[i]];
      model.arcs = std::move(*arcs);
      return SolveResult::sat_with(std::move(model));
    }
  } while (it.next());
  return SolveResult::unsat();
}

}  // namespace

SolveResult brute_decide_theory(const TheoryDecl& theory, const Instance& instance,
                                const BruteOptions& options) {
  const Indexed ix = index_variables(instance);
  const int bound = resolve_bound(options.max_vars);
  if (static_cast<int>(ix.vars.size()) > bound) {
    throw BoundError("oracle: " + std::to_string(ix.vars.size()) +
                     " variables exceed the bound of " + std::to_string(bound));
  }
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && atom.symbol().theory_id != theory.id) {
      throw ContractError("oracle for theory " + theory.id + " cannot evaluate " + atom.str());
    }
  }
  switch (theory.kind) {
    case TheoryKind::kEquality:
      return brute_equality(instance, ix, options.injective);
    case TheoryKind::kPointAlgebra:
    case TheoryKind::kTemporal:
      return brute_order(theory, instance, ix, options.injective);
    case TheoryKind::kHenson:
    case TheoryKind::kHensonLoop:
      return brute_henson(theory, instance, ix, options);
  }
  throw ContractError("oracle: unknown theory kind");
}

namespace {

std::optional<CombinedResult> try_partition(const CombinedProblem& problem, const Indexed& ix,
                                            const std::vector<int>& block, int bound) {
  if (!eq_neq_hold(problem.instance, ix, block)) return std::nullopt;
  std::map<Variable, Variable> rep;
  std::vector<int> first(ix.vars.size(), -1);
  for (std::size_t i = 0; i < ix.vars.size(); ++i) {
    if (first[block[i]] < 0) first[block[i]] = static_cast<int>(i);
    rep[ix.vars[i]] = ix.vars[first[block[i]]];
  }
  CombinedResult result;
  result.verdict = Verdict::kSat;
  BruteOptions options;
  options.injective = true;
  options.max_vars = bound;
  for (const auto& [tid, part] : problem.parts) {
    SolveResult r = brute_decide_theory(problem.theories.at(tid), part.renamed(rep), options);
    if (!r.sat()) return std::nullopt;
    Model model;
    model.arcs = r.witness->arcs;
    for (const Variable& v : part.variables()) model.values[v] = r.witness->values.at(rep[v]);
    result.models[tid] = std::move(model);
  }
  for (std::size_t i = 0; i < ix.vars.size(); ++i) result.arrangement[ix.vars[i]] = block[i];
  return result;
}

}  // namespace

CombinedResult superpose_bruteforce(const CombinedProblem& problem, const OracleOptions& options) {
  const Indexed ix = index_variables(problem.instance);
  const int bound = resolve_bound(options.max_vars);
  if (static_cast<int>(ix.vars.size()) > bound) {
    throw BoundError("oracle: " + std::to_string(ix.vars.size()) +
                     " variables exceed the bound of " + std::to_string(bound));
  }
  if (!options.parallel) {
    PartitionIterator it(ix.vars);
    do {
      if (auto found = try_partition(problem, ix, it.rgs(), bound)) return *found;
    } while (it.next());
    return CombinedResult{};
  }

  std::vector<std::vector<int>> partitions;
  {
    PartitionIterator it(ix.vars);
    do {
      partitions.push_back(it.rgs());
    } while (it.next());
  }
  const long count = static_cast<long>(partitions.size());
  long best = std::numeric_limits<long>::max();
  std::vector<std::optional<CombinedResult>> found(partitions.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    long current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;
    found[i] = try_partition(problem, ix, partitions[i], bound);
    if (found[i]) {
#pragma omp critical(qcsp_oracle_best)
      best = std::min(best, i);
    }
  }
  if (best == std::numeric_limits<long>::max()) return CombinedResult{};
  return *found[best];
}

}  // namespace qcsp
