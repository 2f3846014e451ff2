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

#ifndef QCSP_DIGRAPH_H_
#define QCSP_DIGRAPH_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcsp {

using Arc = std::pair<int, int>;

// Vertices are identified by position in the (sorted) label list.
struct Digraph {
  std::vector<std::string> labels;
  std::set<Arc> arcs;

  int order() const { return static_cast<int>(labels.size()); }
  bool has_arc(int u, int v) const { return arcs.count({u, v}) > 0; }
  // Loopless with exactly one arc between every pair of distinct vertices.
  bool is_tournament() const;

  // "a>b,b>c,c>a"; labels are sorted on construction. Throws ContractError.
  static Digraph parse_arcs(std::string_view text);
  std::string str() const;

  bool operator==(const Digraph&) const = default;
};

using TournamentSet = std::vector<Digraph>;

// Parses "a>b,b>c,c>a;x>y" and checks every member is a tournament on at
// least two vertices.
TournamentSet parse_tournaments(std::string_view text);
std::string render_tournaments(const TournamentSet& set);

Digraph cyclic_triangle();
Digraph transitive_triangle();

}  // namespace qcsp

#endif  // QCSP_DIGRAPH_H_
