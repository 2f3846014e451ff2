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

// Complete search for order-type constraint networks. Each pair of variables
// carries the set of still-possible statuses {<,=,>}; propagation combines
// point-algebra path consistency with per-atom support filtering, and
// branching fixes the lexicographically first undecided pair.

#include <algorithm>
#include <cstdint>

#include "qcsp/errors.h"
#include "qcsp/theories.h"

namespace qcsp {

namespace {

using Status = std::uint8_t;
constexpr Status kLt = 1, kEq = 2, kGt = 4, kAny = 7;

Status converse(Status s) {
  return static_cast<Status>((s & kEq) | ((s & kLt) ? kGt : 0) | ((s & kGt) ? kLt : 0));
}

Status compose_basic(Status a, Status b) {
  if (a == kEq) return b;
  if (b == kEq) return a;
  if (a == b) return a;
  return kAny;
}

Status compose(Status a, Status b) {
  Status out = 0;
  for (Status x : {kLt, kEq, kGt}) {
    if (!(a & x)) continue;
    for (Status y : {kLt, kEq, kGt}) {
      if (b & y) out |= compose_basic(x, y);
    }
  }
  return out;
}

bool singleton(Status s) { return s == kLt || s == kEq || s == kGt; }

Status status_of(int a, int b) { return a < b ? kLt : (a == b ? kEq : kGt); }

struct Constraint {
  std::vector<int> vars;
  const TemporalRelation* relation;
};

class Network {
 public:
  explicit Network(int n) : n_(n), m_(static_cast<std::size_t>(n * n), kAny) {
    for (int i = 0; i < n; ++i) at(i, i) = kEq;
  }

  Status get(int i, int j) const { return m_[i * n_ + j]; }

  // Returns false if the domain becomes empty.
  bool restrict(int i, int j, Status allowed, bool* changed = nullptr) {
    Status next = get(i, j) & allowed;
    if (next == 0) return false;
    if (next != get(i, j)) {
      at(i, j) = next;
      at(j, i) = converse(next);
      if (changed) *changed = true;
    }
    return true;
  }

  bool propagate(const std::vector<Constraint>& constraints) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < n_; ++k) {
        for (int i = 0; i < n_; ++i) {
          if (i == k) continue;
          for (int j = i + 1; j < n_; ++j) {
            if (j == k) continue;
            if (!restrict(i, j, compose(get(i, k), get(k, j)), &changed)) return false;
          }
        }
      }
      for (const Constraint& c : constraints) {
        if (!filter(c, &changed)) return false;
      }
    }
    return true;
  }

  // First undecided pair in lexicographic order, or {-1,-1}.
  std::pair<int, int> undecided() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (!singleton(get(i, j))) return {i, j};
      }
    }
    return {-1, -1};
  }

  std::vector<int> ranks() const {
    std::vector<int> rank(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int r = 0; r < n_; ++r) {
        bool representative = true;
        for (int q = 0; q < r; ++q) {
          if (get(q, r) == kEq) representative = false;
        }
        if (representative && get(r, i) == kLt) ++rank[i];
      }
    }
    return rank;
  }

 private:
  Status& at(int i, int j) { return m_[i * n_ + j]; }

  bool filter(const Constraint& c, bool* changed) {
    const std::size_t k = c.vars.size();
    std::vector<Status> support(k * k, 0);
    bool any = false;
    for (const WeakOrder& order : c.relation->allowed) {
      bool fits = true;
      for (std::size_t p = 0; p < k && fits; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
          if (!(status_of(order[p], order[q]) & get(c.vars[p], c.vars[q]))) {
            fits = false;
            break;
          }
        }
      }
      if (!fits) continue;
      any = true;
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
          support[p * k + q] |= status_of(order[p], order[q]);
        }
      }
    }
    if (!any) return false;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        if (c.vars[p] == c.vars[q]) continue;
        if (!restrict(c.vars[p], c.vars[q], support[p * k + q], changed)) return false;
      }
    }
    return true;
  }

  int n_;
  std::vector<Status> m_;
};

bool search(Network net, const std::vector<Constraint>& constraints,
            std::vector<int>* ranks) {
  if (!net.propagate(constraints)) return false;
  auto [i, j] = net.undecided();
  if (i < 0) {
    *ranks = net.ranks();
    return true;
  }
  for (Status s : {kLt, kEq, kGt}) {
    if (!(net.get(i, j) & s)) continue;
    Network branch = net;
    branch.restrict(i, j, s);
    if (search(std::move(branch), constraints, ranks)) return true;
  }
  return false;
}

const TemporalRelation& builtin_binary(const std::string& name) {
  static const TemporalRelation lt = lt_relation();
  static const TemporalRelation leq = leq_relation();
  return name == "lt" ? lt : leq;
}

}  // namespace

SolveResult temporal_decide(const Instance& instance, const RelationTable& relations) {
  const std::set<Variable> var_set = instance.variables();
  const std::vector<Variable> vars(var_set.begin(), var_set.end());
  auto index_of = [&](const Variable& v) {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  Network net(static_cast<int>(vars.size()));
  std::vector<Constraint> constraints;
  for (const Atom& atom : instance.atoms()) {
    const int a = index_of(atom.args()[0]);
    switch (atom.kind()) {
      case AtomKind::kEq:
        if (!net.restrict(a, index_of(atom.args()[1]), kEq)) return SolveResult::unsat();
        break;
      case AtomKind::kNeq: {
        const int b = index_of(atom.args()[1]);
        if (a == b || !net.restrict(a, b, kLt | kGt)) return SolveResult::unsat();
        break;
      }
      case AtomKind::kRel: {
        const std::string& name = atom.symbol().name;
        const TemporalRelation* relation = nullptr;
        if (auto it = relations.find(name); it != relations.end()) {
          relation = &it->second;
        } else if (name == "lt" || name == "leq") {
          relation = &builtin_binary(name);
        } else {
          throw ContractError("unresolved temporal relation " + atom.str());
        }
        if (relation->arity != static_cast<int>(atom.args().size())) {
          throw ContractError("arity mismatch for " + atom.str());
        }
        Constraint c{{}, relation};
        for (const Variable& v : atom.args()) c.vars.push_back(index_of(v));
        constraints.push_back(std::move(c));
        break;
      }
    }
  }
  std::vector<int> ranks;
  if (!search(std::move(net), constraints, &ranks)) return SolveResult::unsat();
  Model model;
  for (std::size_t i = 0; i < vars.size(); ++i) model.values[vars[i]] = ranks[i];
  return SolveResult::sat_with(std::move(model));
}

SolveResult TemporalSolver::decide(const Instance& instance) const {
  for (const Atom& atom : instance.atoms()) {
    if (atom.is_rel() && atom.symbol().theory_id != id_) {
      throw ContractError("theory " + id_ + " cannot decide " + atom.str());
    }
  }
  return temporal_decide(instance, relations_);
}

bool TemporalSolver::check_model(const Instance& instance, const Model& model) const {
  for (const Atom& atom : instance.atoms()) {
    std::vector<int> vals;
    for (const Variable& v : atom.args()) {
      auto it = model.values.find(v);
      if (it == model.values.end()) return false;
      vals.push_back(it->second);
    }
    switch (atom.kind()) {
      case AtomKind::kEq:
        if (vals[0] != vals[1]) return false;
        break;
      case AtomKind::kNeq:
        if (vals[0] == vals[1]) return false;
        break;
      case AtomKind::kRel: {
        const std::string& name = atom.symbol().name;
        const TemporalRelation* relation = nullptr;
        if (auto it = relations_.find(name); it != relations_.end()) {
          relation = &it->second;
        } else if (name == "lt" || name == "leq") {
          relation = &builtin_binary(name);
        } else {
          return false;
        }
        if (!relation->contains(WeakOrder::of(std::span<const int>(vals)))) return false;
        break;
      }
    }
  }
  return model.arcs.empty();
}

}  // namespace qcsp
