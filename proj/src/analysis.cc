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

#include "qcsp/analysis.h"

#include <algorithm>
#include <random>

#include "qcsp/errors.h"

namespace qcsp {

Signature signature_of(const TheoryDecl& theory) {
  Signature sig;
  for (const RelationDecl& r : theory.relations) {
    sig.relations.push_back(RelationSymbol{theory.id, r.name, r.arity});
  }
  std::sort(sig.relations.begin(), sig.relations.end(),
            [](const RelationSymbol& a, const RelationSymbol& b) { return a.name < b.name; });
  return sig;
}

ConvexityWitness ConvexityWitness::make(const TheorySolver& solver, Instance instance,
                                        VariablePair pair1, VariablePair pair2) {
  const Atom neq1 = Atom::neq(pair1.first, pair1.second);
  const Atom neq2 = Atom::neq(pair2.first, pair2.second);
  ConvexityWitness w{std::move(instance), std::move(pair1), std::move(pair2), {}};
  w.verdicts[0] = solver.decide(w.instance.with(neq1));
  w.verdicts[1] = solver.decide(w.instance.with(neq2));
  w.verdicts[2] = solver.decide(w.instance.with(neq1).with(neq2));
  if (!w.verdicts[0].sat() || !w.verdicts[1].sat() || w.verdicts[2].sat()) {
    throw ContractError("not a convexity violation: " + w.instance.str());
  }
  return w;
}

namespace {

struct Universe {
  std::vector<Variable> vars;
  std::vector<Atom> atoms;
  std::vector<unsigned> masks;  // variables used by each atom
  std::vector<VariablePair> pairs;
};

Universe make_universe(const Signature& signature, int k) {
  Universe u;
  for (int i = 0; i < k; ++i) u.vars.push_back(std::string(1, static_cast<char>('a' + i)));
  std::set<Atom> atoms;
  for (const RelationSymbol& symbol : signature.relations) {
    std::vector<int> digits(static_cast<std::size_t>(symbol.arity), 0);
    while (true) {
      std::vector<Variable> args;
      for (int d : digits) args.push_back(u.vars[d]);
      atoms.insert(Atom::rel(symbol, std::move(args)));
      int pos = symbol.arity - 1;
      while (pos >= 0 && ++digits[pos] == k) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (signature.with_neq) atoms.insert(Atom::neq(u.vars[i], u.vars[j]));
      u.pairs.emplace_back(u.vars[i], u.vars[j]);
    }
  }
  u.atoms.assign(atoms.begin(), atoms.end());
  for (const Atom& atom : u.atoms) {
    unsigned mask = 0;
    for (const Variable& v : atom.args()) mask |= 1u << (v[0] - 'a');
    u.masks.push_back(mask);
  }
  return u;
}

std::optional<ConvexityWitness> check_instance(const TheorySolver& solver, const Universe& u,
                                               const Instance& s) {
  if (!solver.decide(s).sat()) return std::nullopt;
  std::vector<bool> single(u.pairs.size());
  for (std::size_t p = 0; p < u.pairs.size(); ++p) {
    single[p] = solver.decide(s.with(Atom::neq(u.pairs[p].first, u.pairs[p].second))).sat();
  }
  for (std::size_t p = 0; p < u.pairs.size(); ++p) {
    if (!single[p]) continue;
    for (std::size_t q = p + 1; q < u.pairs.size(); ++q) {
      if (!single[q]) continue;
      Instance both = s.with(Atom::neq(u.pairs[p].first, u.pairs[p].second))
                          .with(Atom::neq(u.pairs[q].first, u.pairs[q].second));
      if (!solver.decide(both).sat()) {
        return ConvexityWitness::make(solver, s, u.pairs[p], u.pairs[q]);
      }
    }
  }
  return std::nullopt;
}

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` says stop.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<ConvexityWitness> probe_convexity(const TheorySolver& solver,
                                                const Signature& signature, int max_vars,
                                                int max_atoms, const ProbeMode& mode) {
  if (max_vars < 2 || max_atoms < 1) {
    throw BoundError("probe needs at least 2 variables and 1 atom");
  }
  if (max_vars > 26) throw BoundError("probe supports at most 26 variables");
  if (mode.exhaustive && (max_vars > kExhaustiveMaxVars || max_atoms > kExhaustiveMaxAtoms)) {
    throw BoundError("exhaustive probe is capped at " + std::to_string(kExhaustiveMaxVars) +
                     " variables and " + std::to_string(kExhaustiveMaxAtoms) + " atoms");
  }

  if (!mode.exhaustive) {
    std::mt19937_64 rng(mode.seed);
    std::vector<Universe> universes;
    for (int k = 2; k <= max_vars; ++k) universes.push_back(make_universe(signature, k));
    for (int i = 0; i < mode.count; ++i) {
      const Universe& u = universes[std::uniform_int_distribution<int>(
          0, static_cast<int>(universes.size()) - 1)(rng)];
      if (u.atoms.empty()) continue;
      const int size = std::uniform_int_distribution<int>(
          1, std::min<int>(max_atoms, static_cast<int>(u.atoms.size())))(rng);
      Instance s;
      while (static_cast<int>(s.size()) < size) {
        s.add(u.atoms[std::uniform_int_distribution<std::size_t>(0, u.atoms.size() - 1)(rng)]);
      }
      if (auto w = check_instance(solver, u, s)) return w;
    }
    return std::nullopt;
  }

  std::optional<ConvexityWitness> found;
  for (int k = 2; k <= max_vars && !found; ++k) {
    const Universe u = make_universe(signature, k);
    const unsigned all = (1u << k) - 1;
    for (int size = 1; size <= max_atoms && !found; ++size) {
      for_each_combination(static_cast<int>(u.atoms.size()), size,
                           [&](const std::vector<int>& idx) {
                             unsigned mask = 0;
                             for (int i : idx) mask |= u.masks[i];
                             if (mask != all) return false;
                             Instance s;
                             for (int i : idx) s.add(u.atoms[i]);
                             found = check_instance(solver, u, s);
                             return found.has_value();
                           });
    }
  }
  return found;
}

CrossPreventionReport check_cross_prevention(const TheorySolver& solver,
                                             const PPFormula& formula) {
  const std::set<Variable> distinct(formula.free_vars.begin(), formula.free_vars.end());
  if (formula.free_vars.size() != 4 || distinct.size() != 4) {
    throw ContractError("cross prevention formulas have exactly four free variables (x,y,u,v)");
  }
  const Variable& x = formula.free_vars[0];
  const Variable& y = formula.free_vars[1];
  const Variable& u = formula.free_vars[2];
  const Variable& v = formula.free_vars[3];

  auto run = [&](Instance query, bool want_sat) {
    ConditionCheck c;
    c.result = solver.decide(query);
    c.holds = c.result.sat() == want_sat;
    c.query = std::move(query);
    return c;
  };
  CrossPreventionReport report;
  report.formula = formula;
  report.cond1 = run(formula.body.with(Instance{Atom::eq(x, y), Atom::neq(x, u),
                                                Atom::neq(x, v), Atom::neq(u, v)}),
                     true);
  report.cond2 = run(formula.body.with(Instance{Atom::eq(u, v), Atom::neq(x, y),
                                                Atom::neq(x, u), Atom::neq(y, u)}),
                     true);
  report.cond3 = run(formula.body.with(Instance{Atom::eq(x, y), Atom::eq(u, v)}), false);
  return report;
}

}  // namespace qcsp
