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
#include <functional>
#include <queue>

#include "qcsp/errors.h"
#include "qcsp/theories.h"

namespace qcsp {

namespace {

struct Edge {
  int to;
  bool strict;
};

// Tarjan's algorithm; component ids are assigned in completion order.
class SccFinder {
 public:
  explicit SccFinder(const std::vector<std::vector<Edge>>& graph)
      : graph_(graph),
        index_(graph.size(), -1),
        low_(graph.size(), 0),
        on_stack_(graph.size(), false),
        component_(graph.size(), -1) {
    for (int v = 0; v < static_cast<int>(graph_.size()); ++v) {
      if (index_[v] == -1) visit(v);
    }
  }

  const std::vector<int>& component() const { return component_; }
  int count() const { return count_; }

 private:
  void visit(int v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    for (const Edge& e : graph_[v]) {
      if (index_[e.to] == -1) {
        visit(e.to);
        low_[v] = std::min(low_[v], low_[e.to]);
      } else if (on_stack_[e.to]) {
        low_[v] = std::min(low_[v], index_[e.to]);
      }
    }
    if (low_[v] == index_[v]) {
      int w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = false;
        component_[w] = count_;
      } while (w != v);
      ++count_;
    }
  }

  const std::vector<std::vector<Edge>>& graph_;
  std::vector<int> index_, low_;
  std::vector<bool> on_stack_;
  std::vector<int> component_;
  std::vector<int> stack_;
  int counter_ = 0;
  int count_ = 0;
};

}  // namespace

SolveResult pa_decide(const Instance& instance) {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && (atom.symbol().arity != 2 ||
                          (atom.symbol().name != "lt" && atom.symbol().name != "leq"))) {
      throw ContractError("point algebra cannot decide " + atom.str());
    }
  }
  CollapseResult collapsed = collapse_equalities(instance);
  if (collapsed.instance.has_self_disequality()) return SolveResult::unsat();

  std::set<Variable> var_set;
  for (const auto& [var, rep] : collapsed.var_map) var_set.insert(rep);
  const std::vector<Variable> vars(var_set.begin(), var_set.end());
  auto index_of = [&](const Variable& v) {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  const int n = static_cast<int>(vars.size());
  std::vector<std::vector<Edge>> graph(n);
  for (const Atom& atom : collapsed.instance.atoms()) {
    if (!atom.is_rel()) continue;
    graph[index_of(atom.args()[0])].push_back(
        {index_of(atom.args()[1]), atom.symbol().name == "lt"});
  }
  SccFinder scc(graph);
  const std::vector<int>& comp = scc.component();

  for (int v = 0; v < n; ++v) {
    for (const Edge& e : graph[v]) {
      if (e.strict && comp[v] == comp[e.to]) return SolveResult::unsat();
    }
  }
  for (const Atom& atom : collapsed.instance.atoms()) {
    if (atom.kind() == AtomKind::kNeq &&
        comp[index_of(atom.args()[0])] == comp[index_of(atom.args()[1])]) {
      return SolveResult::unsat();
    }
  }

  // Topological order of the condensation; ties broken by the least
  // variable index in each component.
  const int k = scc.count();
  std::vector<int> least(k, n);
  for (int v = 0; v < n; ++v) least[comp[v]] = std::min(least[comp[v]], v);
  std::vector<std::set<int>> succ(k);
  std::vector<int> indegree(k, 0);
  for (int v = 0; v < n; ++v) {
    for (const Edge& e : graph[v]) {
      if (comp[v] != comp[e.to] && succ[comp[v]].insert(comp[e.to]).second) {
        ++indegree[comp[e.to]];
      }
    }
  }
  using Entry = std::pair<int, int>;  // (least index, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < k; ++c) {
    if (indegree[c] == 0) ready.push({least[c], c});
  }
  std::vector<int> rank(k, -1);
  int next = 0;
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    rank[c] = next++;
    for (int d : succ[c]) {
      if (--indegree[d] == 0) ready.push({least[d], d});
    }
  }

  Model model;
  for (const auto& [var, rep] : collapsed.var_map) {
    model.values[var] = rank[comp[index_of(rep)]];
  }
  return SolveResult::sat_with(std::move(model));
}

SolveResult PointAlgebraSolver::decide(const Instance& instance) const {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && atom.symbol().theory_id != id_) {
      throw ContractError("theory " + id_ + " cannot decide " + atom.str());
    }
  }
  return pa_decide(instance);
}

bool PointAlgebraSolver::check_model(const Instance& instance, const Model& model) const {
  for (const Atom& atom : instance.atoms()) {
    std::vector<int> vals;
    for (const Variable& v : atom.args()) {
      auto it = model.values.find(v);
      if (it == model.values.end()) return false;
      vals.push_back(it->second);
    }
    bool ok = false;
    switch (atom.kind()) {
      case AtomKind::kEq: ok = vals[0] == vals[1]; break;
      case AtomKind::kNeq: ok = vals[0] != vals[1]; break;
      case AtomKind::kRel:
        if (atom.symbol().name == "lt") ok = vals[0] < vals[1];
        if (atom.symbol().name == "leq") ok = vals[0] <= vals[1];
        break;
    }
    if (!ok) return false;
  }
  return model.arcs.empty();
}

}  // namespace qcsp
