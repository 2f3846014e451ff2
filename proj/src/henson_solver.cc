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

namespace {

class Adjacency {
 public:
  Adjacency(const std::set<Arc>& arcs, int order)
      : order_(order), bits_(static_cast<std::size_t>(order * order), false) {
    for (const auto& [u, v] : arcs) bits_[u * order_ + v] = true;
  }
  bool operator()(int u, int v) const { return bits_[u * order_ + v]; }
  int order() const { return order_; }

 private:
  int order_;
  std::vector<bool> bits_;
};

bool extend(const Digraph& pattern, const Adjacency& host, std::vector<int>& image,
            std::vector<bool>& used) {
  const int i = static_cast<int>(image.size());
  if (i == pattern.order()) return true;
  for (int g = 0; g < host.order(); ++g) {
    if (used[g]) continue;
    bool fits = true;
    for (int j = 0; j < i && fits; ++j) {
      const int h = image[j];
      if (pattern.has_arc(j, i)) fits = host(h, g) && !host(g, h);
      if (pattern.has_arc(i, j)) fits = fits && host(g, h) && !host(h, g);
    }
    if (!fits) continue;
    image.push_back(g);
    used[g] = true;
    if (extend(pattern, host, image, used)) return true;
    image.pop_back();
    used[g] = false;
  }
  return false;
}

}  // namespace

bool embeds_forbidden(const std::set<Arc>& arcs, int order, const TournamentSet& forbidden) {
  Adjacency host(arcs, order);
  for (const Digraph& pattern : forbidden) {
    if (pattern.order() > order) continue;
    std::vector<int> image;
    std::vector<bool> used(static_cast<std::size_t>(order), false);
    if (extend(pattern, host, image, used)) return true;
  }
  return false;
}

bool is_henson_structure(const std::set<Arc>& arcs, const TournamentSet& forbidden) {
  int order = 0;
  for (const auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || u == v || arcs.count({v, u})) return false;
    order = std::max({order, u + 1, v + 1});
  }
  return !embeds_forbidden(arcs, order, forbidden);
}

SolveResult henson_decide(const Instance& instance, const TournamentSet& forbidden) {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && (atom.symbol().name != "E" || atom.symbol().arity != 2)) {
      throw ContractError("henson theory cannot decide " + atom.str());
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
  std::set<Arc> arcs;
  for (const Atom& atom : collapsed.instance.atoms()) {
    if (!atom.is_rel()) continue;
    const int u = index_of(atom.args()[0]), v = index_of(atom.args()[1]);
    if (u == v) return SolveResult::unsat();
    arcs.insert({u, v});
  }
  for (const auto& [u, v] : arcs) {
    if (arcs.count({v, u})) return SolveResult::unsat();
  }
  if (embeds_forbidden(arcs, static_cast<int>(vars.size()), forbidden)) {
    return SolveResult::unsat();
  }
  Model model;
  for (const auto& [var, rep] : collapsed.var_map) model.values[var] = index_of(rep);
  model.arcs = std::move(arcs);
  return SolveResult::sat_with(std::move(model));
}

SolveResult HensonSolver::decide(const Instance& instance) const {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && atom.symbol().theory_id != id_) {
      throw ContractError("theory " + id_ + " cannot decide " + atom.str());
    }
  }
  return henson_decide(instance, forbidden_);
}

bool HensonSolver::check_model(const Instance& instance, const Model& model) const {
  if (!is_henson_structure(model.arcs, forbidden_)) return false;
  for (const Atom& atom : instance.atoms()) {
    auto a = model.values.find(atom.args()[0]);
    auto b = model.values.find(atom.args()[1]);
    if (a == model.values.end() || b == model.values.end()) return false;
    if (a->second < 0 || b->second < 0) return false;
    switch (atom.kind()) {
      case AtomKind::kEq:
        if (a->second != b->second) return false;
        break;
      case AtomKind::kNeq:
        if (a->second == b->second) return false;
        break;
      case AtomKind::kRel:
        if (!model.arcs.count({a->second, b->second})) return false;
        break;
    }
  }
  return true;
}

}  // namespace qcsp
