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

// Order types over the rationals. A tuple's order type is the weak order its
// entries induce; relations first-order definable in (Q;<) are unions of
// order types, so they are stored extensionally as sets of weak orders.

#ifndef QCSP_ORDER_TYPES_H_
#define QCSP_ORDER_TYPES_H_

#include <algorithm>
#include <compare>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcsp {

// Rank list with used ranks exactly {0,...,r}. Lower rank = smaller element.
class WeakOrder {
 public:
  WeakOrder() = default;
  // Throws ContractError unless `ranks` is contiguous from 0.
  explicit WeakOrder(std::vector<int> ranks);

  // Order type of arbitrary comparable values.
  template <typename T>
  static WeakOrder of(std::span<const T> values);

  // Parses "0/1/0". Throws ContractError on malformed input.
  static WeakOrder parse(std::string_view text);

  const std::vector<int>& ranks() const { return ranks_; }
  std::size_t size() const { return ranks_.size(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  std::string str() const;

  auto operator<=>(const WeakOrder&) const = default;

 private:
  std::vector<int> ranks_;
};

template <typename T>
WeakOrder WeakOrder::of(std::span<const T> values) {
  std::vector<T> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (const T& v : values) {
    ranks.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
  }
  WeakOrder out;
  out.ranks_ = std::move(ranks);
  return out;
}

// Cursor over all weak orders on n positions in lexicographic rank-list
// order. Starts positioned on the all-zero order.
class WeakOrderCursor {
 public:
  explicit WeakOrderCursor(int n);
  const std::vector<int>& ranks() const { return ranks_; }
  // Advances; returns false once exhausted.
  bool next();

 private:
  std::vector<int> ranks_;
};

struct TemporalRelation {
  int arity = 0;
  std::set<WeakOrder> allowed;

  bool contains(const WeakOrder& order) const { return allowed.count(order) > 0; }
  bool operator==(const TemporalRelation&) const = default;
};

inline constexpr int kMaxPredicateArity = 7;

// All weak orders on `arity` positions accepted by `predicate`. Throws
// BoundError if arity exceeds `max_arity`.
TemporalRelation relation_from_predicate(
    int arity, const std::function<bool(const WeakOrder&)>& predicate,
    int max_arity = kMaxPredicateArity);

// x >= y or x > z, read off the ranks of (x,y,z).
bool mi_predicate(const WeakOrder& order);
TemporalRelation mi_relation();
TemporalRelation lt_relation();
TemporalRelation leq_relation();

}  // namespace qcsp

#endif  // QCSP_ORDER_TYPES_H_
