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

#include "qcsp/digraph.h"

#include <algorithm>

#include "qcsp/errors.h"
#include "qcsp/formulas.h"

namespace qcsp {

bool Digraph::is_tournament() const {
  for (int u = 0; u < order(); ++u) {
    if (has_arc(u, u)) return false;
    for (int v = u + 1; v < order(); ++v) {
      if (has_arc(u, v) == has_arc(v, u)) return false;
    }
  }
  return true;
}

Digraph Digraph::parse_arcs(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> named;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t gt = piece.find('>');
    if (gt == std::string_view::npos) {
      throw ContractError("arc '" + std::string(piece) + "' is not of the form u>v");
    }
    std::string from(piece.substr(0, gt)), to(piece.substr(gt + 1));
    if (!is_identifier(from) || !is_identifier(to)) {
      throw ContractError("bad vertex label in arc '" + std::string(piece) + "'");
    }
    named.emplace_back(std::move(from), std::move(to));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  Digraph g;
  for (const auto& [u, v] : named) {
    g.labels.push_back(u);
    g.labels.push_back(v);
  }
  std::sort(g.labels.begin(), g.labels.end());
  g.labels.erase(std::unique(g.labels.begin(), g.labels.end()), g.labels.end());
  auto index = [&](const std::string& label) {
    return static_cast<int>(std::lower_bound(g.labels.begin(), g.labels.end(), label) -
                            g.labels.begin());
  };
  for (const auto& [u, v] : named) g.arcs.insert({index(u), index(v)});
  return g;
}

std::string Digraph::str() const {
  std::string out;
  for (const auto& [u, v] : arcs) {
    if (!out.empty()) out += ',';
    out += labels[u] + ">" + labels[v];
  }
  return out;
}

TournamentSet parse_tournaments(std::string_view text) {
  TournamentSet set;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    Digraph g = Digraph::parse_arcs(text.substr(
        pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (g.order() < 2 || !g.is_tournament()) {
      throw ContractError("'" + g.str() + "' is not a tournament on >= 2 vertices");
    }
    set.push_back(std::move(g));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return set;
}

std::string render_tournaments(const TournamentSet& set) {
  std::string out;
  for (const Digraph& g : set) {
    if (!out.empty()) out += ';';
    out += g.str();
  }
  return out;
}

Digraph cyclic_triangle() { return Digraph::parse_arcs("a>b,b>c,c>a"); }
Digraph transitive_triangle() { return Digraph::parse_arcs("a>b,b>c,a>c"); }

}  // namespace qcsp
