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

// Theory and relation declarations plus the line-oriented problem format:
//
//   theory <tid> equality|point_algebra|temporal [convex|nonconvex]
//   theory <tid> henson|henson_loop forbid a>b,b>c,c>a[;...] [convex|nonconvex]
//   relation <tid> <name>/<k> ordertypes 0/1/0,...
//   relation <tid> <name>/3 builtin mi
//   atom <tid> <name> <v1> ... <vk>
//   eq <v1> <v2>
//   neq <v1> <v2>
//
// `#` starts a comment. point_algebra and temporal theories implicitly
// declare lt/2 and leq/2; henson theories implicitly declare E/2.

#ifndef QCSP_PROBLEM_H_
#define QCSP_PROBLEM_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcsp/digraph.h"
#include "qcsp/formulas.h"
#include "qcsp/order_types.h"

namespace qcsp {

enum class TheoryKind {
  kEquality,      // (N; !=)
  kPointAlgebra,  // (Q; <, <=)
  kTemporal,      // (Q; order-type relations)
  kHenson,        // Henson digraph omitting a tournament set
  kHensonLoop,    // Henson digraph plus an isolated loop vertex
};

std::string_view to_string(TheoryKind kind);
std::optional<TheoryKind> theory_kind_from_string(std::string_view text);
bool default_convex(TheoryKind kind);

using RelationTable = std::map<std::string, TemporalRelation>;

struct RelationDecl {
  std::string name;
  int arity = 0;
  // Empty for the edge relation of henson theories.
  TemporalRelation order_types;
  // "mi" when declared through `builtin mi`.
  std::string builtin;
  bool implicit = false;

  bool operator==(const RelationDecl&) const = default;
};

struct TheoryDecl {
  std::string id;
  TheoryKind kind = TheoryKind::kEquality;
  bool convex = true;
  TournamentSet forbidden;
  std::vector<RelationDecl> relations;

  const RelationDecl* find(std::string_view name) const;
  // Throws ContractError for an unknown relation name.
  RelationSymbol symbol(std::string_view name) const;
  RelationTable relation_table() const;

  bool operator==(const TheoryDecl&) const = default;
};

// Declares the implicit relations for `kind` and the default convex flag.
TheoryDecl make_theory(std::string id, TheoryKind kind, TournamentSet forbidden = {});
// Throws ContractError on duplicates or wrong theory kind.
void add_relation(TheoryDecl& theory, std::string name, TemporalRelation relation,
                  std::string builtin = {});

struct Problem {
  std::vector<TheoryDecl> theories;
  Instance instance;

  const TheoryDecl* theory(std::string_view id) const;
  std::vector<std::string> theory_ids() const;

  bool operator==(const Problem&) const = default;
};

// Throws ParseError (with line number) on malformed or inconsistent input.
Problem parse_problem(std::string_view text);
// Canonical serializer; parse_problem(render_problem(p)) == p.
std::string render_problem(const Problem& problem);

}  // namespace qcsp

#endif  // QCSP_PROBLEM_H_
