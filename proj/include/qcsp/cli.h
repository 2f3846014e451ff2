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

// Command-line front end. Everything except argv handling lives in the
// library so tests can drive it with string streams.
//
// Exit codes:
//   0  a result was produced (SAT, UNSAT, probe/cross-check report, table)
//   1  usage error: unknown flag, unreadable file, wrong theory profile
//   2  input file does not parse
//   3  convex mode requested on a theory not flagged convex
//   4  a resource bound was exceeded
//   5  an output file could not be written

#ifndef QCSP_CLI_H_
#define QCSP_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qcsp/combine.h"
#include "qcsp/combined.h"

namespace qcsp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMode = 3;
inline constexpr int kExitBound = 4;
inline constexpr int kExitWrite = 5;

struct RunConfig {
  std::string command;     // solve, oracle, probe-convexity, cross-check, henson, bench
  std::string subcommand;  // henson: solve, reduce-up, reduce-down
  Mode mode = Mode::kAuto;
  std::string input;
  std::string theory;  // probe-convexity / cross-check: which theory to use
  std::string free_vars;
  std::string out;
  bool witness = false;
  bool parallel = false;
  bool exhaustive = false;
  int random_count = 0;
  std::uint64_t seed = 1;
  int max_vars = 4;
  int max_atoms = 4;
  int runs = 5;
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_probe(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cross_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_henson(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

// Witness lines following the verdict line:
//   arrangement <var> <block>
//   model <tid> <var> <value>      (value `a` is the loop vertex)
//   arc <tid> <u> <v>              (digraph theories only)
std::string render_witness(const CombinedResult& result);

// Parses a full solve transcript (verdict line plus witness lines).
// Throws ParseError.
CombinedResult parse_witness(std::string_view text);

}  // namespace qcsp

#endif  // QCSP_CLI_H_
