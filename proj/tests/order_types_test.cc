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

#include <doctest.h>

#include "families.h"
#include "qcsp/digraph.h"
#include "qcsp/errors.h"
#include "qcsp/oracle.h"
#include "qcsp/order_types.h"

namespace qcsp {
namespace {

TEST_CASE("weak order basics") {
  CHECK(WeakOrder::parse("0/1/0").ranks() == std::vector<int>{0, 1, 0});
  CHECK(WeakOrder::parse("0/1/0").str() == "0/1/0");
  CHECK_THROWS_AS(WeakOrder({1, 1}), ContractError);
  CHECK_THROWS_AS(WeakOrder({0, 2}), ContractError);
  CHECK_THROWS_AS(WeakOrder::parse("0//1"), ContractError);
  CHECK_THROWS_AS(WeakOrder::parse("a/0"), ContractError);
  const std::vector<double> v = {0.5, -1.0, 0.5, 3.0};
  CHECK(WeakOrder::of<double>(v) == WeakOrder({1, 0, 1, 2}));
}

TEST_CASE("weak order enumeration") {
  CHECK(enumerate_weak_orders(0).size() == 1);
  CHECK(enumerate_weak_orders(2) ==
        std::vector<WeakOrder>{WeakOrder({0, 0}), WeakOrder({0, 1}), WeakOrder({1, 0})});
  for (int n = 0; n <= 6; ++n) {
    const auto orders = enumerate_weak_orders(n);
    CHECK(orders.size() == testing::ordered_bell(n));
    CHECK(std::is_sorted(orders.begin(), orders.end()));
    CHECK(std::adjacent_find(orders.begin(), orders.end()) == orders.end());
  }
  CHECK_THROWS_AS(enumerate_weak_orders(kMaxWeakOrderSize + 1), BoundError);
}

TEST_CASE("reference counts") {
  const std::uint64_t fubini[] = {1, 1, 3, 13, 75, 541, 4683};
  const std::uint64_t bells[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) {
    CHECK(testing::ordered_bell(n) == fubini[n]);
    CHECK(testing::bell(n) == bells[n]);
  }
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(3) == std::vector<std::vector<int>>{
                                       {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  for (int n = 0; n <= 7; ++n) {
    const auto parts = enumerate_partitions(n);
    CHECK(parts.size() == testing::bell(n));
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    for (const auto& rgs : parts) {
      int top = -1;
      for (int b : rgs) {
        CHECK(b <= top + 1);
        top = std::max(top, b);
      }
    }
  }
  CHECK_THROWS_AS(enumerate_partitions(kMaxPartitionSize + 1), BoundError);
}

TEST_CASE("partition iterator") {
  PartitionIterator it({"x", "y", "z"});
  std::vector<std::vector<std::vector<Variable>>> seen;
  do {
    seen.push_back(it.blocks());
  } while (it.next());
  REQUIRE(seen.size() == 5);
  CHECK(seen.front() == std::vector<std::vector<Variable>>{{"x", "y", "z"}});
  CHECK(seen.back() == std::vector<std::vector<Variable>>{{"x"}, {"y"}, {"z"}});
  PartitionIterator empty({});
  CHECK(empty.block_count() == 0);
  CHECK_FALSE(empty.next());
}

TEST_CASE("cursor walks the same sequence as the enumerator") {
  for (int n = 1; n <= 5; ++n) {
    WeakOrderCursor cursor(n);
    std::vector<WeakOrder> walked;
    do {
      walked.emplace_back(cursor.ranks());
    } while (cursor.next());
    CHECK(walked == enumerate_weak_orders(n));
  }
}

TEST_CASE("relations from predicates") {
  CHECK(relation_from_predicate(3, [](const WeakOrder&) { return true; }).allowed.size() == 13);
  const TemporalRelation mi = mi_relation();
  CHECK(mi.arity == 3);
  CHECK(mi.allowed.size() == 9);
  std::set<std::vector<int>> got;
  for (const WeakOrder& o : mi.allowed) got.insert(o.ranks());
  CHECK(got == testing::mi_types_by_sampling());
  CHECK(lt_relation().allowed == std::set<WeakOrder>{WeakOrder({0, 1})});
  CHECK(leq_relation().allowed == std::set<WeakOrder>{WeakOrder({0, 0}), WeakOrder({0, 1})});
  CHECK_THROWS_AS(relation_from_predicate(8, [](const WeakOrder&) { return true; }), BoundError);
}

TEST_CASE("digraphs and tournaments") {
  const Digraph c3 = Digraph::parse_arcs("a>b,b>c,c>a");
  CHECK(c3 == cyclic_triangle());
  CHECK(c3.is_tournament());
  CHECK(transitive_triangle().is_tournament());
  CHECK_FALSE(Digraph::parse_arcs("a>b,b>a").is_tournament());
  CHECK_FALSE(Digraph::parse_arcs("a>b,b>c").is_tournament());
  CHECK_THROWS_AS(Digraph::parse_arcs("ab"), ContractError);
  const TournamentSet set = parse_tournaments("a>b,b>c,c>a;x>y,y>z,x>z");
  REQUIRE(set.size() == 2);
  CHECK(parse_tournaments(render_tournaments(set)) == set);
  CHECK_THROWS_AS(parse_tournaments("a>b,b>c"), ContractError);
}

}  // namespace
}  // namespace qcsp
