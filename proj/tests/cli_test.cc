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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcsp/cli.h"
#include "qcsp/combined.h"
#include "qcsp/errors.h"
#include "qcsp/problem.h"

namespace qcsp {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  std::string first_line() const { return out.substr(0, out.find('\n')); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcsp");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(QCSP_FIXTURE_DIR "/") + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST_CASE("solve verdicts and exit codes") {
  Run r = run({"solve", fixture("pa_eq_unsat.qcsp"), "--mode", "convex"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "UNSAT\n");

  r = run({"solve", fixture("mi_sat.qcsp"), "--mode", "convex"});
  CHECK(r.code == kExitMode);

  r = run({"solve", fixture("empty.qcsp")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "SAT\n");

  r = run({"solve", fixture("bad_arity.qcsp")});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(run({"solve", fixture("mi_unsat.qcsp")}).out == "UNSAT\n");
  CHECK(run({"solve", fixture("mi_sat.qcsp"), "--mode", "complete"}).out == "SAT\n");
}

TEST_CASE("usage errors") {
  CHECK(run({"solve", fixture("empty.qcsp"), "--bogus"}).code == kExitUsage);
  CHECK(run({"solve", fixture("empty.qcsp"), "--mode", "fast"}).code == kExitUsage);
  CHECK(run({"solve", fixture("does_not_exist.qcsp")}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"probe-convexity", fixture("mi_probe.qcsp"), "--max-vars", "3", "--max-atoms", "2",
             "--exhaustive", "--random", "5"})
            .code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("witness lines replay against the input") {
  for (const char* name : {"mi_sat.qcsp", "pa_copy.qcsp", "henson_loop_sat.qcsp", "mixed.qcsp"}) {
    for (const char* parallel : {"", "--parallel"}) {
      CAPTURE(name);
      std::vector<std::string> args = {"solve", fixture(name), "--witness"};
      if (*parallel) args.push_back(parallel);
      const Run r = run(args);
      REQUIRE(r.code == kExitOk);
      REQUIRE(r.first_line() == "SAT");
      const CombinedProblem problem = make_combined(parse_problem(slurp(fixture(name))));
      const CombinedResult parsed = parse_witness(r.out);
      CHECK(check_combined_witness(problem, parsed));
      CHECK("SAT\n" + render_witness(parsed) == r.out);
    }
  }
}

TEST_CASE("witness parser") {
  const CombinedResult r = parse_witness("SAT\narrangement x 0\nmodel h x a\narc h 0 1\n");
  CHECK(r.sat());
  CHECK(r.models.at("h").values.at("x") == -1);
  CHECK(r.models.at("h").arcs.count({0, 1}) == 1);
  CHECK_FALSE(parse_witness("UNSAT\n").sat());
  CHECK_THROWS_AS(parse_witness(""), ParseError);
  CHECK_THROWS_AS(parse_witness("MAYBE\n"), ParseError);
  CHECK_THROWS_AS(parse_witness("SAT\nmodel t x\n"), ParseError);
  CHECK_THROWS_AS(parse_witness("SAT\narrangement x one\n"), ParseError);
}

TEST_CASE("oracle subcommand") {
  CHECK(run({"oracle", fixture("pa_eq_unsat.qcsp")}).out == "UNSAT\n");
  CHECK(run({"oracle", fixture("mi_sat.qcsp")}).out == "SAT\n");
  CHECK(run({"oracle", fixture("too_many_vars.qcsp")}).code == kExitBound);
}

TEST_CASE("probe and cross-check subcommands") {
  Run r = run({"probe-convexity", fixture("mi_probe.qcsp"), "--max-vars", "4", "--max-atoms", "4",
               "--random", "20000", "--seed", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.first_line() == "witness");
  CHECK(r.out.find("verdicts SAT SAT UNSAT") != std::string::npos);

  r = run({"probe-convexity", fixture("pa_only.qcsp"), "--max-vars", "3", "--max-atoms", "3",
           "--exhaustive"});
  CHECK(r.out == "none\n");

  CHECK(run({"probe-convexity", fixture("mi_probe.qcsp"), "--max-vars", "6", "--max-atoms", "4"})
            .code == kExitBound);
  CHECK(run({"probe-convexity", fixture("pa_eq_unsat.qcsp"), "--max-vars", "3", "--max-atoms",
             "3"})
            .code == kExitUsage);

  r = run({"cross-check", fixture("pa_cross.qcsp"), "--free", "x,y,u,v"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "PASS\ncond1 holds SAT\ncond2 holds SAT\ncond3 holds UNSAT\n");
  r = run({"cross-check", fixture("pa_cross.qcsp"), "--free", "x,y,u"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("henson subcommands") {
  CHECK(run({"henson", "solve", fixture("henson_c3.qcsp")}).out == "UNSAT\n");
  CHECK(run({"henson", "solve", fixture("henson_path.qcsp")}).out == "SAT\n");

  const Run up = run({"henson", "reduce-up", fixture("henson_path.qcsp")});
  REQUIRE(up.code == kExitOk);
  const Problem reduced = parse_problem(up.out);
  CHECK(reduced.theories.size() == 2);
  CHECK(reduced.theories[0].kind == TheoryKind::kHensonLoop);
  CHECK(reduced.instance.size() == 2 + 1 + 3);

  // The reduced file decides the same way through every route.
  const std::string path = std::filesystem::temp_directory_path() / "qcsp_reduce_up.qcsp";
  for (const char* source : {"henson_path.qcsp", "henson_c3.qcsp"}) {
    const Run direct = run({"henson", "solve", fixture(source)});
    std::ofstream(path) << run({"henson", "reduce-up", fixture(source)}).out;
    CHECK(run({"henson", "reduce-down", path}).out == direct.out);
    CHECK(run({"solve", path}).out == direct.out);
    CHECK(run({"oracle", path}).out == direct.out);
  }
  std::remove(path.c_str());

  CHECK(run({"henson", "reduce-down", fixture("henson_loop.qcsp")}).out == "UNSAT\n");
  CHECK(run({"henson", "reduce-up", fixture("henson_loop.qcsp")}).code == kExitUsage);
  CHECK(run({"henson", "solve", fixture("pa_eq_unsat.qcsp")}).code == kExitUsage);
  CHECK(run({"henson", "frobnicate", fixture("henson_c3.qcsp")}).code == kExitUsage);
}

TEST_CASE("bench table and csv") {
  const std::string csv = std::filesystem::temp_directory_path() / "qcsp_bench.csv";
  const Run r = run({"bench", "--seed", "1", "--runs", "1", "--out", csv});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 11);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].substr(rows[i].size() - 3) == "yes");
  }
  const std::string written = slurp(csv);
  CHECK(written.rfind("family,shared_vars,mode,median_ms,agree\n", 0) == 0);
  CHECK(std::count(written.begin(), written.end(), '\n') == 11);
  std::remove(csv.c_str());

  CHECK(run({"bench", "--runs", "1", "--out", "/nonexistent_dir/x.csv"}).code == kExitWrite);
}

}  // namespace
}  // namespace qcsp
