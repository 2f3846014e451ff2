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

// Decision procedures for single theories behind one interface. Every
// procedure accepts a pure instance: Rel atoms of its own theory plus Eq and
// Neq atoms.

#ifndef QCSP_THEORIES_H_
#define QCSP_THEORIES_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "qcsp/digraph.h"
#include "qcsp/formulas.h"
#include "qcsp/order_types.h"
#include "qcsp/problem.h"

namespace qcsp {

enum class Verdict { kSat, kUnsat };

inline std::string_view to_string(Verdict v) { return v == Verdict::kSat ? "SAT" : "UNSAT"; }

// Vertex value standing for the loop vertex of a henson_loop structure.
inline constexpr int kLoopVertex = -1;

// A finite certificate. `values` holds a block index (equality), a rank
// (point algebra, temporal) or a vertex id (henson kinds); `arcs` holds the
// witness digraph for henson kinds.
struct Model {
  std::map<Variable, int> values;
  std::set<Arc> arcs;

  bool operator==(const Model&) const = default;
};

struct SolveResult {
  Verdict verdict = Verdict::kUnsat;
  std::optional<Model> witness;

  bool sat() const { return verdict == Verdict::kSat; }
  static SolveResult unsat() { return {}; }
  static SolveResult sat_with(Model model) { return {Verdict::kSat, std::move(model)}; }
};

class TheorySolver {
 public:
  virtual ~TheorySolver() = default;

  virtual TheoryKind kind() const = 0;
  virtual const std::string& theory_id() const = 0;
  // Throws ContractError when `instance` is not pure for this theory.
  virtual SolveResult decide(const Instance& instance) const = 0;
  // Replays `model` against every atom of `instance` and checks the model is
  // a legal structure for the theory.
  virtual bool check_model(const Instance& instance, const Model& model) const = 0;
};

// decide(instance + {x != y}) is UNSAT.
bool entails_eq(const TheorySolver& solver, const Instance& instance,
                const Variable& x, const Variable& y);

class EqualitySolver final : public TheorySolver {
 public:
  explicit EqualitySolver(std::string theory_id = "eq") : id_(std::move(theory_id)) {}
  TheoryKind kind() const override { return TheoryKind::kEquality; }
  const std::string& theory_id() const override { return id_; }
  SolveResult decide(const Instance& instance) const override;
  bool check_model(const Instance& instance, const Model& model) const override;

 private:
  std::string id_;
};

class PointAlgebraSolver final : public TheorySolver {
 public:
  explicit PointAlgebraSolver(std::string theory_id) : id_(std::move(theory_id)) {}
  TheoryKind kind() const override { return TheoryKind::kPointAlgebra; }
  const std::string& theory_id() const override { return id_; }
  SolveResult decide(const Instance& instance) const override;
  bool check_model(const Instance& instance, const Model& model) const override;

 private:
  std::string id_;
};

class TemporalSolver final : public TheorySolver {
 public:
  TemporalSolver(std::string theory_id, RelationTable relations)
      : id_(std::move(theory_id)), relations_(std::move(relations)) {}
  TheoryKind kind() const override { return TheoryKind::kTemporal; }
  const std::string& theory_id() const override { return id_; }
  SolveResult decide(const Instance& instance) const override;
  bool check_model(const Instance& instance, const Model& model) const override;
  const RelationTable& relations() const { return relations_; }

 private:
  std::string id_;
  RelationTable relations_;
};

class HensonSolver final : public TheorySolver {
 public:
  HensonSolver(std::string theory_id, TournamentSet forbidden)
      : id_(std::move(theory_id)), forbidden_(std::move(forbidden)) {}
  TheoryKind kind() const override { return TheoryKind::kHenson; }
  const std::string& theory_id() const override { return id_; }
  SolveResult decide(const Instance& instance) const override;
  bool check_model(const Instance& instance, const Model& model) const override;
  const TournamentSet& forbidden() const { return forbidden_; }

 private:
  std::string id_;
  TournamentSet forbidden_;
};

SolveResult eq_decide(const Instance& instance);
SolveResult pa_decide(const Instance& instance);
SolveResult temporal_decide(const Instance& instance, const RelationTable& relations);
SolveResult henson_decide(const Instance& instance, const TournamentSet& forbidden);

// True if some tournament of `forbidden` has an induced copy in the digraph
// given by `arcs` over vertices 0..order-1: an injective map sending every
// arc u->v of the tournament to an arc with the reverse arc absent.
bool embeds_forbidden(const std::set<Arc>& arcs, int order, const TournamentSet& forbidden);

// A legal witness digraph: loopless, no 2-cycles, omits every forbidden
// tournament.
bool is_henson_structure(const std::set<Arc>& arcs, const TournamentSet& forbidden);

}  // namespace qcsp

#endif  // QCSP_THEORIES_H_
