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

#include "qcsp/combine.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcsp/errors.h"

namespace qcsp {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kAuto: return "auto";
    case Mode::kConvex: return "convex";
    case Mode::kComplete: return "complete";
  }
  return "?";
}

namespace {

// A search state: the collapsed instance (no Eq atoms) plus the map from
// every original variable to its current representative.
struct Node {
  Instance instance;
  std::map<Variable, Variable> rep;
  std::pair<Variable, Variable> branch;  // set when open
};

enum class NodeState { kDead, kLeaf, kOpen };

Node make_root(const CombinedProblem& problem) {
  CollapseResult collapsed = collapse_equalities(problem.instance);
  return Node{std::move(collapsed.instance), std::move(collapsed.var_map), {}};
}

void merge(Node& node, const std::set<Atom>& equalities) {
  Instance joined = node.instance;
  for (const Atom& eq : equalities) joined.add(eq);
  CollapseResult collapsed = collapse_equalities(joined);
  for (auto& [original, rep] : node.rep) {
    auto it = collapsed.var_map.find(rep);
    if (it != collapsed.var_map.end()) rep = it->second;
  }
  node.instance = std::move(collapsed.instance);
}

std::map<std::string, Instance> parts_of(const CombinedProblem& problem, const Instance& inst) {
  return split_by_signature(inst, problem.theory_ids()).parts;
}

bool parts_satisfiable(const CombinedProblem& problem,
                       const std::map<std::string, Instance>& parts) {
  for (const auto& [tid, part] : parts) {
    if (!problem.solvers.at(tid)->decide(part).sat()) return false;
  }
  return true;
}

bool decided(const Instance& inst, const Variable& u, const Variable& v) {
  return inst.atoms().count(Atom::neq(u, v)) > 0;
}

std::set<Atom> entailed_equalities(const CombinedProblem& problem, const Instance& inst,
                                   const std::map<std::string, Instance>& parts) {
  const std::set<Variable> interface = interface_variables(parts);
  std::map<std::string, std::set<Variable>> part_vars;
  for (const auto& [tid, part] : parts) part_vars[tid] = part.variables();
  std::set<Atom> out;
  for (auto a = interface.begin(); a != interface.end(); ++a) {
    for (auto b = std::next(a); b != interface.end(); ++b) {
      if (decided(inst, *a, *b)) continue;
      for (const auto& [tid, part] : parts) {
        if (!part_vars[tid].count(*a) || !part_vars[tid].count(*b)) continue;
        if (entails_eq(*problem.solvers.at(tid), part, *a, *b)) {
          out.insert(Atom::eq(*a, *b));
          break;
        }
      }
    }
  }
  return out;
}

// Propagates to a fixpoint; false when some part becomes unsatisfiable.
bool settle_equalities(const CombinedProblem& problem, Node& node) {
  while (true) {
    if (node.instance.has_self_disequality()) return false;
    const std::map<std::string, Instance> parts = parts_of(problem, node.instance);
    if (!parts_satisfiable(problem, parts)) return false;
    std::set<Atom> eqs = entailed_equalities(problem, node.instance, parts);
    if (eqs.empty()) return true;
#ifndef NDEBUG
    for (const Atom& eq : eqs) {
      bool some = false;
      for (const auto& [tid, part] : parts) {
        some = some || entails_eq(*problem.solvers.at(tid), part, eq.args()[0], eq.args()[1]);
      }
      assert(some);
    }
#endif
    merge(node, eqs);
  }
}

NodeState settle(const CombinedProblem& problem, Node& node) {
  if (!settle_equalities(problem, node)) return NodeState::kDead;
  const std::set<Variable> interface = interface_variables(parts_of(problem, node.instance));
  for (auto a = interface.begin(); a != interface.end(); ++a) {
    for (auto b = std::next(a); b != interface.end(); ++b) {
      if (!decided(node.instance, *a, *b)) {
        node.branch = {*a, *b};
        return NodeState::kOpen;
      }
    }
  }
  return NodeState::kLeaf;
}

std::vector<Node> children(const Node& node, bool eq_first) {
  Node equal = node;
  merge(equal, {Atom::eq(node.branch.first, node.branch.second)});
  Node distinct = node;
  distinct.instance.add(Atom::neq(node.branch.first, node.branch.second));
  if (eq_first) return {std::move(equal), std::move(distinct)};
  return {std::move(distinct), std::move(equal)};
}

std::optional<Node> depth_first(const CombinedProblem& problem, Node node, bool eq_first) {
  switch (settle(problem, node)) {
    case NodeState::kDead: return std::nullopt;
    case NodeState::kLeaf: return node;
    case NodeState::kOpen: break;
  }
  for (Node& child : children(node, eq_first)) {
    if (auto leaf = depth_first(problem, std::move(child), eq_first)) return leaf;
  }
  return std::nullopt;
}

struct FrontierItem {
  Node node;
  std::optional<NodeState> state;
};

// Splits the search tree into subtrees listed in depth-first order, so the
// first successful subtree holds the serial search's witness.
std::optional<Node> parallel_search(const CombinedProblem& problem, Node root, bool eq_first) {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  const std::size_t target = static_cast<std::size_t>(std::max(8, 4 * threads));
  std::vector<FrontierItem> frontier;
  frontier.push_back({std::move(root), std::nullopt});
  bool expanded = true;
  while (expanded && frontier.size() < target) {
    expanded = false;
    std::vector<FrontierItem> next;
    for (FrontierItem& item : frontier) {
      if (!item.state) item.state = settle(problem, item.node);
      if (*item.state != NodeState::kOpen) {
        next.push_back(std::move(item));
        continue;
      }
      for (Node& child : children(item.node, eq_first)) {
        next.push_back({std::move(child), std::nullopt});
      }
      expanded = true;
    }
    frontier = std::move(next);
  }

  const long count = static_cast<long>(frontier.size());
  long best = std::numeric_limits<long>::max();
  std::vector<std::optional<Node>> found(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    long current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;
    FrontierItem& item = frontier[i];
    if (!item.state) {
      found[i] = depth_first(problem, std::move(item.node), eq_first);
    } else if (*item.state == NodeState::kLeaf) {
      found[i] = std::move(item.node);
    } else if (*item.state == NodeState::kOpen) {
      // Unreachable: open items are always expanded.
      found[i] = depth_first(problem, std::move(item.node), eq_first);
    }
    if (found[i]) {
#pragma omp critical(qcsp_search_best)
      best = std::min(best, i);
    }
  }
  if (best == std::numeric_limits<long>::max()) return std::nullopt;
  return std::move(found[best]);
}

// Builds the certificate from a leaf whose interface variables are pairwise
// separated by Neq atoms and whose parts are all satisfiable.
CombinedResult build_witness(const CombinedProblem& problem, const Node& leaf) {
  const std::map<std::string, Instance> parts = parts_of(problem, leaf.instance);
  const std::set<Variable> interface = interface_variables(parts);

  std::map<std::string, Model> current;
  for (const auto& [tid, part] : parts) {
    SolveResult r = problem.solvers.at(tid)->decide(part);
    if (!r.sat()) {
      throw ConvexityNotDeclared("theory " + tid +
                                 " rejects the all-distinct arrangement of its "
                                 "undetermined interface variables; it is not convex");
    }
    current[tid] = std::move(*r.witness);
  }

  std::map<Variable, int> block;
  int next_block = 0;
  for (const Variable& v : interface) block[v] = next_block++;
  for (const auto& [tid, part] : parts) {
    const Model& model = current[tid];
    std::map<int, int> block_of_value;
    for (const Variable& v : part.variables()) {
      if (interface.count(v)) block_of_value.emplace(model.values.at(v), block[v]);
    }
    for (const Variable& v : part.variables()) {
      if (interface.count(v)) continue;
      auto [it, inserted] = block_of_value.emplace(model.values.at(v), next_block);
      if (inserted) ++next_block;
      block[v] = it->second;
    }
  }
  for (const auto& [original, rep] : leaf.rep) {
    if (!block.count(rep)) block[rep] = next_block++;
  }

  CombinedResult result;
  result.verdict = Verdict::kSat;
  for (const auto& [original, rep] : leaf.rep) result.arrangement[original] = block.at(rep);

  const std::map<std::string, Instance> original_parts =
      parts_of(problem, problem.instance);
  for (const auto& [tid, part] : original_parts) {
    if (part.empty()) continue;
    const Model& model = current[tid];
    std::map<int, int> value_of_block;
    int fresh = 0;
    for (const auto& [v, value] : model.values) {
      value_of_block.emplace(block.at(v), value);
      fresh = std::max(fresh, value + 1);
    }
    Model out;
    out.arcs = model.arcs;
    for (const Variable& v : part.variables()) {
      const Variable& rep = leaf.rep.at(v);
      auto it = model.values.find(rep);
      if (it != model.values.end()) {
        out.values[v] = it->second;
        continue;
      }
      auto [slot, inserted] = value_of_block.emplace(block.at(rep), fresh);
      if (inserted) ++fresh;
      out.values[v] = slot->second;
    }
    result.models[tid] = std::move(out);
  }
  return result;
}

}  // namespace

std::set<Atom> propagate_step(const CombinedProblem& problem, const std::set<Atom>& learned) {
  Node node = make_root(problem);
  merge(node, learned);
  if (node.instance.has_self_disequality()) return {};
  return entailed_equalities(problem, node.instance, parts_of(problem, node.instance));
}

CombinedResult solve_convex(const CombinedProblem& problem) {
  for (const auto& [tid, convex] : problem.convex_flags) {
    if (!convex) {
      throw ConvexityNotDeclared("theory " + tid +
                                 " is not declared convex; use complete mode");
    }
  }
  Node node = make_root(problem);
  if (!settle_equalities(problem, node)) return CombinedResult{};
  const std::set<Variable> interface = interface_variables(parts_of(problem, node.instance));
  for (auto a = interface.begin(); a != interface.end(); ++a) {
    for (auto b = std::next(a); b != interface.end(); ++b) {
      node.instance.add(Atom::neq(*a, *b));
    }
  }
  return build_witness(problem, node);
}

CombinedResult solve_complete(const CombinedProblem& problem, const SolveOptions& options) {
  std::optional<Node> leaf =
      options.parallel ? parallel_search(problem, make_root(problem), options.eq_first)
                       : depth_first(problem, make_root(problem), options.eq_first);
  if (!leaf) return CombinedResult{};
  return build_witness(problem, *leaf);
}

CombinedResult solve_auto(const CombinedProblem& problem, const SolveOptions& options) {
  const bool all_convex =
      std::all_of(problem.convex_flags.begin(), problem.convex_flags.end(),
                  [](const auto& entry) { return entry.second; });
  return all_convex ? solve_convex(problem) : solve_complete(problem, options);
}

CombinedResult solve(const CombinedProblem& problem, Mode mode, const SolveOptions& options) {
  switch (mode) {
    case Mode::kAuto: return solve_auto(problem, options);
    case Mode::kConvex: return solve_convex(problem);
    case Mode::kComplete: return solve_complete(problem, options);
  }
  throw ContractError("unknown mode");
}

}  // namespace qcsp
