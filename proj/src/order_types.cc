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

#include "qcsp/order_types.h"

#include <charconv>

#include "qcsp/errors.h"

namespace qcsp {

namespace {

bool contiguous(const std::vector<int>& ranks) {
  std::vector<bool> seen(ranks.size(), false);
  for (int r : ranks) {
    if (r < 0 || r >= static_cast<int>(ranks.size())) return false;
    seen[r] = true;
  }
  int top = -1;
  for (int r : ranks) top = std::max(top, r);
  for (int r = 0; r <= top; ++r) {
    if (!seen[r]) return false;
  }
  return true;
}

}  // namespace

WeakOrder::WeakOrder(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  if (!contiguous(ranks_)) {
    throw ContractError("rank list " + str() + " is not contiguous from 0");
  }
}

WeakOrder WeakOrder::parse(std::string_view text) {
  std::vector<int> ranks;
  std::size_t pos = 0;
  while (true) {
    std::size_t slash = text.find('/', pos);
    std::string_view piece = text.substr(pos, slash == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : slash - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size()) {
      throw ContractError("malformed order type '" + std::string(text) + "'");
    }
    ranks.push_back(value);
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return WeakOrder(std::move(ranks));
}

std::string WeakOrder::str() const {
  std::string out;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(ranks_[i]);
  }
  return out;
}

WeakOrderCursor::WeakOrderCursor(int n) : ranks_(static_cast<std::size_t>(n), 0) {}

// Lexicographic successor among surjections onto {0..m}: bump the rightmost
// position that admits a larger value, then fill the suffix with the least
// completion (zeros, then the missing ranks in ascending order).
bool WeakOrderCursor::next() {
  const int n = static_cast<int>(ranks_.size());
  for (int i = n - 1; i >= 0; --i) {
    const int suffix = n - 1 - i;
    for (int v = ranks_[i] + 1; v < n; ++v) {
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      int top = v;
      used[v] = true;
      for (int j = 0; j < i; ++j) {
        used[ranks_[j]] = true;
        top = std::max(top, ranks_[j]);
      }
      std::vector<int> missing;
      for (int r = 0; r < top; ++r) {
        if (!used[r]) missing.push_back(r);
      }
      if (static_cast<int>(missing.size()) > suffix) continue;
      ranks_[i] = v;
      int k = i + 1;
      for (int z = 0; z < suffix - static_cast<int>(missing.size()); ++z) ranks_[k++] = 0;
      for (int r : missing) ranks_[k++] = r;
      return true;
    }
  }
  return false;
}

TemporalRelation relation_from_predicate(
    int arity, const std::function<bool(const WeakOrder&)>& predicate,
    int max_arity) {
  if (arity < 1) throw ContractError("relation arity must be positive");
  if (arity > max_arity) {
    throw BoundError("relation arity " + std::to_string(arity) +
                     " exceeds enumeration bound " + std::to_string(max_arity));
  }
  TemporalRelation relation;
  relation.arity = arity;
  WeakOrderCursor cursor(arity);
  do {
    WeakOrder order(cursor.ranks());
    if (predicate(order)) relation.allowed.insert(std::move(order));
  } while (cursor.next());
  return relation;
}

bool mi_predicate(const WeakOrder& order) {
  return order[0] >= order[1] || order[0] > order[2];
}

TemporalRelation mi_relation() { return relation_from_predicate(3, mi_predicate); }

TemporalRelation lt_relation() {
  return relation_from_predicate(2, [](const WeakOrder& o) { return o[0] < o[1]; });
}

TemporalRelation leq_relation() {
  return relation_from_predicate(2, [](const WeakOrder& o) { return o[0] <= o[1]; });
}

}  // namespace qcsp
