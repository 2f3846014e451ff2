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

#include "qcsp/problem.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qcsp/errors.h"

namespace qcsp {

std::string_view to_string(TheoryKind kind) {
  switch (kind) {
    case TheoryKind::kEquality: return "equality";
    case TheoryKind::kPointAlgebra: return "point_algebra";
    case TheoryKind::kTemporal: return "temporal";
    case TheoryKind::kHenson: return "henson";
    case TheoryKind::kHensonLoop: return "henson_loop";
  }
  return "?";
}

std::optional<TheoryKind> theory_kind_from_string(std::string_view text) {
  for (TheoryKind kind : {TheoryKind::kEquality, TheoryKind::kPointAlgebra,
                          TheoryKind::kTemporal, TheoryKind::kHenson,
                          TheoryKind::kHensonLoop}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

bool default_convex(TheoryKind kind) {
  return kind == TheoryKind::kEquality || kind == TheoryKind::kPointAlgebra;
}

const RelationDecl* TheoryDecl::find(std::string_view name) const {
  for (const RelationDecl& r : relations) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

RelationSymbol TheoryDecl::symbol(std::string_view name) const {
  const RelationDecl* decl = find(name);
  if (!decl) {
    throw ContractError("theory " + id + " has no relation " + std::string(name));
  }
  return RelationSymbol{id, decl->name, decl->arity};
}

RelationTable TheoryDecl::relation_table() const {
  RelationTable table;
  for (const RelationDecl& r : relations) {
    if (!r.order_types.allowed.empty() || r.order_types.arity > 0) {
      table[r.name] = r.order_types;
    }
  }
  return table;
}

TheoryDecl make_theory(std::string id, TheoryKind kind, TournamentSet forbidden) {
  TheoryDecl theory;
  theory.id = std::move(id);
  theory.kind = kind;
  theory.convex = default_convex(kind);
  theory.forbidden = std::move(forbidden);
  switch (kind) {
    case TheoryKind::kPointAlgebra:
    case TheoryKind::kTemporal:
      theory.relations.push_back({"lt", 2, lt_relation(), "", true});
      theory.relations.push_back({"leq", 2, leq_relation(), "", true});
      break;
    case TheoryKind::kHenson:
    case TheoryKind::kHensonLoop:
      theory.relations.push_back({"E", 2, {}, "", true});
      break;
    case TheoryKind::kEquality:
      break;
  }
  return theory;
}

void add_relation(TheoryDecl& theory, std::string name, TemporalRelation relation,
                  std::string builtin) {
  if (theory.kind != TheoryKind::kTemporal) {
    throw ContractError("relations can only be declared for temporal theories, not " +
                        std::string(to_string(theory.kind)));
  }
  if (theory.find(name)) {
    throw ContractError("duplicate relation " + theory.id + "." + name);
  }
  int arity = relation.arity;
  theory.relations.push_back(
      {std::move(name), arity, std::move(relation), std::move(builtin), false});
}

const TheoryDecl* Problem::theory(std::string_view id) const {
  for (const TheoryDecl& t : theories) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::vector<std::string> Problem::theory_ids() const {
  std::vector<std::string> ids;
  for (const TheoryDecl& t : theories) ids.push_back(t.id);
  return ids;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) tokens.push_back(token);
  return tokens;
}

class LineParser {
 public:
  Problem run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no_;
      if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::vector<std::string> tokens = tokenize(line);
      if (!tokens.empty()) {
        try {
          dispatch(tokens);
        } catch (const ContractError& e) {
          fail(e.what());
        }
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    return std::move(problem_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_no_, message);
  }

  void expect_identifier(const std::string& token, const char* what) const {
    if (!is_identifier(token)) fail(std::string("invalid ") + what + " '" + token + "'");
  }

  TheoryDecl& theory(const std::string& id) {
    for (TheoryDecl& t : problem_.theories) {
      if (t.id == id) return t;
    }
    fail("undeclared theory '" + id + "'");
  }

  void dispatch(const std::vector<std::string>& tokens) {
    const std::string& keyword = tokens[0];
    if (keyword == "theory") {
      parse_theory(tokens);
    } else if (keyword == "relation") {
      parse_relation(tokens);
    } else if (keyword == "atom") {
      parse_atom(tokens);
    } else if (keyword == "eq" || keyword == "neq") {
      if (tokens.size() != 3) fail(keyword + " takes exactly two variables");
      expect_identifier(tokens[1], "variable");
      expect_identifier(tokens[2], "variable");
      problem_.instance.add(keyword == "eq" ? Atom::eq(tokens[1], tokens[2])
                                            : Atom::neq(tokens[1], tokens[2]));
    } else {
      fail("unknown directive '" + keyword + "'");
    }
  }

  void parse_theory(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3) fail("theory needs an id and a kind");
    expect_identifier(tokens[1], "theory id");
    if (problem_.theory(tokens[1])) fail("duplicate theory '" + tokens[1] + "'");
    std::optional<TheoryKind> kind = theory_kind_from_string(tokens[2]);
    if (!kind) fail("unknown theory kind '" + tokens[2] + "'");
    std::size_t next = 3;
    TournamentSet forbidden;
    if (*kind == TheoryKind::kHenson || *kind == TheoryKind::kHensonLoop) {
      if (tokens.size() < 5 || tokens[3] != "forbid") {
        fail("henson theories need 'forbid <tournament>[;<tournament>]'");
      }
      forbidden = parse_tournaments(tokens[4]);
      next = 5;
    }
    TheoryDecl decl = make_theory(tokens[1], *kind, std::move(forbidden));
    if (next < tokens.size()) {
      if (tokens[next] == "convex") {
        decl.convex = true;
      } else if (tokens[next] == "nonconvex") {
        decl.convex = false;
      } else {
        fail("unexpected token '" + tokens[next] + "'");
      }
      ++next;
    }
    if (next != tokens.size()) fail("trailing tokens after theory declaration");
    problem_.theories.push_back(std::move(decl));
  }

  void parse_relation(const std::vector<std::string>& tokens) {
    if (tokens.size() != 5) fail("relation <tid> <name>/<k> ordertypes|builtin <spec>");
    TheoryDecl& t = theory(tokens[1]);
    std::size_t slash = tokens[2].find('/');
    if (slash == std::string::npos) fail("relation name must be written <name>/<arity>");
    std::string name = tokens[2].substr(0, slash);
    expect_identifier(name, "relation name");
    int arity = 0;
    std::string_view arity_text(tokens[2]);
    arity_text.remove_prefix(slash + 1);
    auto [end, ec] = std::from_chars(arity_text.data(),
                                     arity_text.data() + arity_text.size(), arity);
    if (ec != std::errc() || end != arity_text.data() + arity_text.size() || arity < 1) {
      fail("bad arity in '" + tokens[2] + "'");
    }
    if (tokens[3] == "builtin") {
      if (tokens[4] != "mi") fail("unknown builtin relation '" + tokens[4] + "'");
      if (arity != 3) fail("builtin mi has arity 3");
      add_relation(t, name, mi_relation(), "mi");
    } else if (tokens[3] == "ordertypes") {
      TemporalRelation relation;
      relation.arity = arity;
      std::string_view list(tokens[4]);
      std::size_t pos = 0;
      while (true) {
        std::size_t comma = list.find(',', pos);
        WeakOrder order = WeakOrder::parse(list.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (static_cast<int>(order.size()) != arity) {
          fail("order type " + order.str() + " has length != " + std::to_string(arity));
        }
        relation.allowed.insert(std::move(order));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      add_relation(t, name, std::move(relation));
    } else {
      fail("expected 'ordertypes' or 'builtin', got '" + tokens[3] + "'");
    }
  }

  void parse_atom(const std::vector<std::string>& tokens) {
    if (tokens.size() < 4) fail("atom <tid> <name> <v1> ... <vk>");
    const TheoryDecl& t = theory(tokens[1]);
    const RelationDecl* r = t.find(tokens[2]);
    if (!r) fail("undeclared relation '" + tokens[1] + "." + tokens[2] + "'");
    std::vector<Variable> args(tokens.begin() + 3, tokens.end());
    for (const Variable& v : args) expect_identifier(v, "variable");
    if (static_cast<int>(args.size()) != r->arity) {
      fail("arity mismatch: " + tokens[2] + " has arity " + std::to_string(r->arity) +
           ", got " + std::to_string(args.size()) + " arguments");
    }
    problem_.instance.add(Atom::rel(RelationSymbol{t.id, r->name, r->arity}, std::move(args)));
  }

  Problem problem_;
  int line_no_ = 0;
};

}  // namespace

Problem parse_problem(std::string_view text) { return LineParser().run(text); }

std::string render_problem(const Problem& problem) {
  std::ostringstream out;
  for (const TheoryDecl& t : problem.theories) {
    out << "theory " << t.id << " " << to_string(t.kind);
    if (!t.forbidden.empty()) out << " forbid " << render_tournaments(t.forbidden);
    if (t.convex != default_convex(t.kind)) out << (t.convex ? " convex" : " nonconvex");
    out << "\n";
    for (const RelationDecl& r : t.relations) {
      if (r.implicit) continue;
      out << "relation " << t.id << " " << r.name << "/" << r.arity;
      if (!r.builtin.empty()) {
        out << " builtin " << r.builtin << "\n";
        continue;
      }
      out << " ordertypes ";
      bool first = true;
      for (const WeakOrder& o : r.order_types.allowed) {
        out << (first ? "" : ",") << o.str();
        first = false;
      }
      out << "\n";
    }
  }
  for (const Atom& atom : problem.instance.atoms()) {
    switch (atom.kind()) {
      case AtomKind::kRel:
        out << "atom " << atom.symbol().theory_id << " " << atom.symbol().name;
        for (const Variable& v : atom.args()) out << " " << v;
        break;
      case AtomKind::kEq:
        out << "eq " << atom.args()[0] << " " << atom.args()[1];
        break;
      case AtomKind::kNeq:
        out << "neq " << atom.args()[0] << " " << atom.args()[1];
        break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qcsp
