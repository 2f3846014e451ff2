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

#include <cstdlib>

#include "families.h"
#include "qcsp/combine.h"
#include "qcsp/errors.h"
#include "qcsp/henson.h"
#include "qcsp/oracle.h"

namespace qcsp {
namespace {

TEST_CASE("brute force per theory") {
  const TheoryDecl t = testing::mi_theory();
  const Instance unsat{Atom::rel(t.symbol("mi"), {"x", "y", "z"}),
                       Atom::rel(t.symbol("lt"), {"x", "y"}),
                       Atom::rel(t.symbol("lt"), {"x", "z"})};
  CHECK_FALSE(brute_decide_theory(t, unsat).sat());
  CHECK_FALSE(temporal_decide(unsat, t.relation_table()).sat());

  const TheoryDecl loop = testing::henson_loop_theory();
  const Instance self{Atom::rel(loop.symbol("E"), {"x", "x"})};
  const SolveResult r = brute_decide_theory(loop, self);
  REQUIRE(r.sat());
  CHECK(r.witness->values.at("x") == kLoopVertex);
  CHECK_FALSE(brute_decide_theory(testing::henson_theory(), self).sat());

  const TheoryDecl e = testing::eq_theory();
  CHECK(brute_decide_theory(e, {Atom::neq("x", "y")}).sat());
  CHECK_FALSE(brute_decide_theory(e, {Atom::neq("x", "y"), Atom::eq("x", "y")}).sat());
  CHECK_THROWS_AS(brute_decide_theory(e, {Atom::rel({"e", "lt", 2}, {"x", "y"})}), ContractError);
}

TEST_CASE("injective brute force") {
  const TheoryDecl p = testing::pa_theory();
  const Instance s{Atom::rel(p.symbol("leq"), {"x", "y"}), Atom::rel(p.symbol("leq"), {"y", "x"})};
  CHECK(brute_decide_theory(p, s).sat());
  BruteOptions injective;
  injective.injective = true;
  CHECK_FALSE(brute_decide_theory(p, s, injective).sat());
}

TEST_CASE("brute force matches the decision procedures") {
  const TheoryDecl t = testing::mi_theory();
  const TheoryDecl p = testing::pa_theory("t");
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Instance s = testing::random_temporal_instance(rng, t, 5, 6, true);
    CAPTURE(s.str());
    CHECK(brute_decide_theory(t, s).sat() == temporal_decide(s, t.relation_table()).sat());
  }
  testing::for_each_subset(testing::binary_order_universe("t", 3), 3, [&](const Instance& s) {
    CHECK(brute_decide_theory(p, s).sat() == pa_decide(s).sat());
  });
}

TEST_CASE("pruning henson completions does not change verdicts") {
  const TheoryDecl h = testing::henson_loop_theory();
  BruteOptions plain;
  plain.prune_completions = false;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const Instance s = testing::random_henson_instance(rng, h.symbol("E"), 4, 0.3, 2);
    CHECK(brute_decide_theory(h, s).sat() == brute_decide_theory(h, s, plain).sat());
  }
}

TEST_CASE("superposition") {
  const TheoryDecl p = testing::pa_theory();
  const TheoryDecl q = testing::pa_theory("q");
  const TheoryDecl e = testing::eq_theory();
  const CombinedProblem independent = make_combined(
      {p, q}, {Atom::rel(p.symbol("lt"), {"x", "y"}), Atom::rel(q.symbol("lt"), {"y", "x"})});
  const CombinedResult r = superpose_bruteforce(independent);
  REQUIRE(r.sat());
  CHECK(r.arrangement.at("x") != r.arrangement.at("y"));
  CHECK(check_combined_witness(independent, r));

  const CombinedProblem merged = make_combined(
      {p, e}, {Atom::rel(p.symbol("leq"), {"x", "y"}), Atom::rel(p.symbol("leq"), {"y", "x"}),
               Atom::neq("x", "y")});
  CHECK_FALSE(superpose_bruteforce(merged).sat());
  CHECK(superpose_bruteforce(make_combined(std::vector<TheoryDecl>{}, Instance{})).sat());
}

TEST_CASE("parallel superposition returns the serial witness") {
  const TheoryDecl t = testing::mi_theory();
  const TheoryDecl e = testing::eq_theory();
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const CombinedProblem cp =
        make_combined({t, e}, testing::random_temporal_instance(rng, t, 6, 7, true));
    const CombinedResult serial = superpose_bruteforce(cp);
    const CombinedResult parallel = superpose_bruteforce(cp, {true, 0});
    REQUIRE(serial.verdict == parallel.verdict);
    if (serial.sat()) {
      CHECK(check_combined_witness(cp, serial));
      CHECK(serial.arrangement == parallel.arrangement);
    }
  }
}

TEST_CASE("oracle bounds are explicit") {
  const TheoryDecl e = testing::eq_theory();
  Instance big;
  const auto v = testing::variable_names(9);
  for (std::size_t i = 1; i < v.size(); ++i) big.add(Atom::neq(v[0], v[i]));
  const CombinedProblem cp = make_combined({e}, big);
  CHECK_THROWS_AS(superpose_bruteforce(cp), BoundError);
  CHECK(superpose_bruteforce(cp, {false, 9}).sat());
  BruteOptions small;
  small.max_vars = 3;
  CHECK_THROWS_AS(brute_decide_theory(e, big, small), BoundError);
}

TEST_CASE("bound from the environment") {
  CHECK(oracle_variable_bound() == kDefaultOracleBound);
  ::setenv("QCSP_ORACLE_BOUND", "3", 1);
  CHECK(oracle_variable_bound() == 3);
  const TheoryDecl e = testing::eq_theory();
  CHECK_THROWS_AS(
      superpose_bruteforce(make_combined(
          {e}, {Atom::neq("a", "b"), Atom::neq("c", "d")})),
      BoundError);
  ::setenv("QCSP_ORACLE_BOUND", "junk", 1);
  CHECK(oracle_variable_bound() == kDefaultOracleBound);
  ::unsetenv("QCSP_ORACLE_BOUND");
}

}  // namespace
}  // namespace qcsp
