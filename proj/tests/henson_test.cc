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
#include "qcsp/combine.h"
#include "qcsp/errors.h"
#include "qcsp/henson.h"
#include "qcsp/oracle.h"

namespace qcsp {
namespace {

const RelationSymbol kE{"h", "E", 2};
const TournamentSet kC3 = {cyclic_triangle()};

Atom edge(Variable a, Variable b) { return Atom::rel(kE, {std::move(a), std::move(b)}); }

bool oracle_sat(const Instance& s, const TournamentSet& forbidden = kC3) {
  const TheoryDecl h = make_theory("h", TheoryKind::kHensonLoop, forbidden);
  return superpose_bruteforce(make_combined({h, testing::eq_theory()}, s)).sat();
}

TEST_CASE("S* construction") {
  Variable fresh;
  const Instance s_star = build_s_star({edge("x1", "x2")}, kE, &fresh);
  CHECK(fresh == "x0");
  CHECK(s_star == Instance{edge("x0", "x0"), Atom::neq("x0", "x1"), Atom::neq("x0", "x2"),
                           edge("x1", "x2")});
  CHECK(build_s_star({}, kE) == Instance{edge("x0", "x0")});

  const Instance clash{edge("x0", "y"), edge("y", "z")};
  const Instance reduced = build_s_star(clash, kE, &fresh);
  CHECK(fresh == "x0_");
  CHECK(reduced.size() == clash.size() + 1 + clash.variables().size());
}

TEST_CASE("component labelling") {
  CHECK_FALSE(component_label_solve({edge("x", "x"), Atom::neq("x", "y"), edge("y", "y")}, kC3)
                  .sat());
  const SolveResult one = component_label_solve({edge("x", "x"), Atom::neq("x", "y")}, kC3);
  REQUIRE(one.sat());
  CHECK(one.witness->values.at("x") == kLoopVertex);
  CHECK(one.witness->values.at("y") != kLoopVertex);
  CHECK_FALSE(component_label_solve({edge("x", "y"), edge("y", "z"), edge("z", "x"),
                                     Atom::neq("x", "w"), edge("w", "w")},
                                    kC3)
                  .sat());
  // A disequality inside a single labelled component also rejects.
  CHECK_FALSE(
      component_label_solve({edge("x", "y"), edge("y", "z"), edge("z", "x"), Atom::neq("x", "z")},
                            kC3)
          .sat());
  CHECK_FALSE(component_label_solve({Atom::neq("x", "x")}, kC3).sat());
  CHECK_THROWS_AS(component_label_solve({Atom::rel({"h", "F", 2}, {"x", "y"})}, kC3),
                  ContractError);
}

TEST_CASE("component labelling matches the oracle on the examples") {
  for (const Instance& s :
       {Instance{edge("x", "x"), Atom::neq("x", "y"), edge("y", "y")},
        Instance{edge("x", "x"), Atom::neq("x", "y")},
        Instance{edge("x", "y"), edge("y", "z"), edge("z", "x"), Atom::neq("x", "w"),
                 edge("w", "w")}}) {
    CAPTURE(s.str());
    CHECK(component_label_solve(s, kC3).sat() == oracle_sat(s));
  }
}

TEST_CASE("loop solver witnesses check") {
  const HensonLoopSolver solver("h", kC3);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 400; ++i) {
    const Instance s = testing::random_henson_instance(rng, kE, 5, 0.2, 3);
    const SolveResult r = solver.decide(s);
    CAPTURE(s.str());
    if (r.sat()) CHECK(solver.check_model(s, *r.witness));
  }
  CHECK_FALSE(solver.check_model({edge("x", "y")}, Model{{{"x", kLoopVertex}, {"y", 0}}, {}}));
}

TEST_CASE("forward reduction round trip on four vertices with loops") {
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    const Instance s = testing::arcs_with_loops(mask, 4, kE);
    const bool direct = henson_decide(s, kC3).sat();
    CHECK(direct == component_label_solve(build_s_star(s, kE), kC3).sat());
  }
}

TEST_CASE("extra disequalities keep loop-free instances satisfiable") {
  const std::vector<Instance> neqs = testing::neq_sets(4, 6);
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const Instance s = testing::loopless_arcs(mask, 4, kE);
    if (!henson_decide(s, kC3).sat()) continue;
    for (const Instance& n : neqs) {
      CHECK(henson_decide(s.with(n), kC3).sat());
    }
  }
}

TEST_CASE("labelling agrees with the oracle for the transitive triangle") {
  const TournamentSet t3 = {transitive_triangle()};
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1500; ++i) {
    const Instance s = testing::random_henson_instance(rng, kE, 4, 0.25, 3);
    CAPTURE(s.str());
    CHECK(component_label_solve(s, t3).sat() == oracle_sat(s, t3));
  }
}

TEST_CASE("fresh variables") {
  CHECK(fresh_variable({}) == "x0");
  CHECK(fresh_variable({edge("x0", "x0_")}) == "x0__");
  CHECK(fresh_variable({edge("a", "b")}, "q") == "q");
}

}  // namespace
}  // namespace qcsp
