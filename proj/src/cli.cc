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

#include "qcsp/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qcsp/analysis.h"
#include "qcsp/errors.h"
#include "qcsp/henson.h"
#include "qcsp/oracle.h"
#include "qcsp/problem.h"

namespace qcsp {
namespace {

// Usage problems detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem load(const RunConfig& config) { return parse_problem(read_file(config.input)); }

std::string render_value(int value) {
  return value == kLoopVertex ? "a" : std::to_string(value);
}

bool is_digraph_theory(TheoryKind kind) {
  return kind == TheoryKind::kHenson || kind == TheoryKind::kHensonLoop;
}

void print_result(const CombinedResult& result, bool witness, std::ostream& out) {
  out << to_string(result.verdict) << "\n";
  if (witness && result.sat()) out << render_witness(result);
}

const TheoryDecl& pick_theory(const Problem& problem, const std::string& wanted) {
  if (!wanted.empty()) {
    const TheoryDecl* t = problem.theory(wanted);
    if (t == nullptr) throw UsageError("no theory '" + wanted + "' in input");
    return *t;
  }
  if (problem.theories.size() != 1) {
    throw UsageError("input declares " + std::to_string(problem.theories.size()) +
                     " theories; pick one with --theory");
  }
  return problem.theories.front();
}

// Single-theory result in the combined witness shape: blocks follow values.
CombinedResult single_theory_result(const std::string& tid, const Instance& instance,
                                    const SolveResult& r) {
  CombinedResult out;
  out.verdict = r.verdict;
  if (!r.sat()) return out;
  const CollapseResult collapsed = collapse_equalities(instance);
  const Model& model = *r.witness;
  std::map<int, int> block_of_value;
  for (const Variable& v : instance.variables()) {
    const Variable& rep = collapsed.var_map.at(v);
    auto it = model.values.find(rep);
    const int value = it == model.values.end() ? 0 : it->second;
    auto [pos, fresh] =
        block_of_value.emplace(value, static_cast<int>(block_of_value.size()));
    (void)fresh;
    out.arrangement[v] = pos->second;
    out.models[tid].values[v] = value;
  }
  out.models[tid].arcs = model.arcs;
  return out;
}

const TheoryDecl& henson_theory(const Problem& problem) {
  const TheoryDecl* found = nullptr;
  for (const TheoryDecl& t : problem.theories) {
    if (!is_digraph_theory(t.kind)) continue;
    if (found != nullptr) throw UsageError("input declares more than one henson theory");
    found = &t;
  }
  if (found == nullptr) throw UsageError("input declares no henson theory");
  return *found;
}

// ----- bench -----

struct BenchRow {
  std::string family;
  int shared = 0;
  Mode mode = Mode::kConvex;
  double median_ms = 0;
  bool agree = true;
};

Variable shared_name(int i) { return "s" + std::to_string(i); }

// Point algebra over {p} and a second point algebra over {q}: both convex.
CombinedProblem convex_instance(int shared, std::mt19937_64& rng) {
  std::vector<TheoryDecl> theories = {make_theory("p", TheoryKind::kPointAlgebra),
                                      make_theory("q", TheoryKind::kPointAlgebra)};
  Instance inst;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const TheoryDecl& t : theories) {
    std::vector<Variable> vars;
    for (int i = 0; i < shared; ++i) vars.push_back(shared_name(i));
    vars.push_back(t.id + "0");
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (int i = 0; i < shared; ++i) {
      Variable other = vars[pick(rng)];
      if (other == shared_name(i)) other = vars.back();
      std::vector<Variable> args = {shared_name(i), other};
      if (coin(rng)) std::swap(args[0], args[1]);
      inst.add(Atom::rel(t.symbol(coin(rng) ? "lt" : "leq"), std::move(args)));
    }
  }
  std::uniform_int_distribution<int> sv(0, shared - 1);
  const int a = sv(rng), b = sv(rng);
  if (a != b) inst.add(Atom::neq(shared_name(a), shared_name(b)));
  return make_combined(theories, inst);
}

// Temporal {mi, leq} plus point algebra; the temporal side is not convex.
CombinedProblem mi_instance(int shared, std::mt19937_64& rng) {
  TheoryDecl t = make_theory("t", TheoryKind::kTemporal);
  t.convex = false;
  add_relation(t, "mi", mi_relation(), "mi");
  std::vector<TheoryDecl> theories = {t, make_theory("p", TheoryKind::kPointAlgebra)};
  Instance inst;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const TheoryDecl& th : theories) {
    std::vector<Variable> vars;
    for (int i = 0; i < shared; ++i) vars.push_back(shared_name(i));
    vars.push_back(th.id + "0");
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (int i = 0; i < shared; ++i) {
      if (th.kind == TheoryKind::kTemporal && coin(rng)) {
        inst.add(Atom::rel(th.symbol("mi"), {shared_name(i), vars[pick(rng)], vars[pick(rng)]}));
        continue;
      }
      Variable other = vars[pick(rng)];
      if (other == shared_name(i)) other = vars.back();
      std::vector<Variable> args = {shared_name(i), other};
      if (coin(rng)) std::swap(args[0], args[1]);
      const bool strict = th.kind == TheoryKind::kPointAlgebra && coin(rng);
      inst.add(Atom::rel(th.symbol(strict ? "lt" : "leq"), std::move(args)));
    }
  }
  std::uniform_int_distribution<int> sv(0, shared - 1);
  for (int k = 0; k < 2; ++k) {
    const int a = sv(rng), b = sv(rng);
    if (a != b) inst.add(Atom::neq(shared_name(a), shared_name(b)));
  }
  return make_combined(theories, inst);
}

constexpr int kBenchBatch = 10;
constexpr int kBenchMinShared = 2;
constexpr int kBenchMaxShared = 6;

BenchRow bench_row(const std::string& family, int shared, const RunConfig& config) {
  std::mt19937_64 rng(config.seed * 1000003u + static_cast<std::uint64_t>(shared) * 7919u +
                      (family == "convex" ? 0u : 1u));
  std::vector<CombinedProblem> batch;
  for (int i = 0; i < kBenchBatch; ++i) {
    batch.push_back(family == "convex" ? convex_instance(shared, rng) : mi_instance(shared, rng));
  }
  BenchRow row;
  row.family = family;
  row.shared = shared;
  row.mode = family == "convex" ? Mode::kConvex : Mode::kComplete;
  SolveOptions options;
  options.parallel = config.parallel;

  std::vector<Verdict> verdicts;
  std::vector<double> times;
  for (int run = 0; run < std::max(1, config.runs); ++run) {
    verdicts.clear();
    const auto start = std::chrono::steady_clock::now();
    for (const CombinedProblem& p : batch) verdicts.push_back(solve(p, row.mode, options).verdict);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  row.median_ms = times[times.size() / 2];

  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Verdict reference = row.mode == Mode::kConvex
                                  ? solve_complete(batch[i]).verdict
                                  : superpose_bruteforce(batch[i]).verdict;
    if (reference != verdicts[i]) row.agree = false;
  }
  return row;
}

}  // namespace

std::string render_witness(const CombinedResult& result) {
  std::ostringstream out;
  for (const auto& [v, block] : result.arrangement) out << "arrangement " << v << " " << block << "\n";
  for (const auto& [tid, model] : result.models) {
    for (const auto& [v, value] : model.values) {
      out << "model " << tid << " " << v << " " << render_value(value) << "\n";
    }
    for (const auto& [u, v] : model.arcs) out << "arc " << tid << " " << u << " " << v << "\n";
  }
  return out.str();
}

CombinedResult parse_witness(std::string_view text) {
  CombinedResult result;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_verdict = false;
  auto to_int = [&](const std::string& s) {
    if (s == "a") return kLoopVertex;
    try {
      std::size_t used = 0;
      const int value = std::stoi(s, &used);
      if (used == s.size()) return value;
    } catch (const std::exception&) {
    }
    throw ParseError(lineno, "expected an integer, got '" + s + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string w; fields >> w;) f.push_back(w);
    if (f.empty()) continue;
    if (!have_verdict) {
      if (f.size() != 1 || (f[0] != "SAT" && f[0] != "UNSAT")) {
        throw ParseError(lineno, "first line must be SAT or UNSAT");
      }
      result.verdict = f[0] == "SAT" ? Verdict::kSat : Verdict::kUnsat;
      have_verdict = true;
    } else if (f[0] == "arrangement" && f.size() == 3) {
      result.arrangement[f[1]] = to_int(f[2]);
    } else if (f[0] == "model" && f.size() == 4) {
      result.models[f[1]].values[f[2]] = to_int(f[3]);
    } else if (f[0] == "arc" && f.size() == 4) {
      result.models[f[1]].arcs.emplace(to_int(f[2]), to_int(f[3]));
    } else {
      throw ParseError(lineno, "unrecognised witness line '" + line + "'");
    }
  }
  if (!have_verdict) throw ParseError(0, "empty transcript");
  return result;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream&) {
  const CombinedProblem problem = make_combined(load(config));
  SolveOptions options;
  options.parallel = config.parallel;
  print_result(solve(problem, config.mode, options), config.witness, out);
  return kExitOk;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream&) {
  const CombinedProblem problem = make_combined(load(config));
  OracleOptions options;
  options.parallel = config.parallel;
  print_result(superpose_bruteforce(problem, options), config.witness, out);
  return kExitOk;
}

int cmd_probe(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Problem problem = load(config);
  const TheoryDecl& theory = pick_theory(problem, config.theory);
  const auto solver = make_solver(theory);
  const ProbeMode mode = config.random_count > 0
                             ? ProbeMode::make_random(config.random_count, config.seed)
                             : ProbeMode::make_exhaustive();
  const auto witness =
      probe_convexity(*solver, signature_of(theory), config.max_vars, config.max_atoms, mode);
  if (!witness) {
    out << "none\n";
    return kExitOk;
  }
  out << "witness\n";
  out << render_problem(Problem{{}, witness->instance});
  out << "pair " << witness->pair1.first << " " << witness->pair1.second << "\n";
  out << "pair " << witness->pair2.first << " " << witness->pair2.second << "\n";
  out << "verdicts";
  for (const SolveResult& r : witness->verdicts) out << " " << to_string(r.verdict);
  out << "\n";
  return kExitOk;
}

int cmd_cross_check(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Problem problem = load(config);
  const TheoryDecl& theory = pick_theory(problem, config.theory);
  std::vector<Variable> free;
  std::stringstream ss(config.free_vars);
  for (std::string v; std::getline(ss, v, ',');) free.push_back(v);
  const CrossPreventionReport report =
      check_cross_prevention(*make_solver(theory), PPFormula::make(free, problem.instance));
  out << (report.passes() ? "PASS" : "FAIL") << "\n";
  const ConditionCheck* conds[] = {&report.cond1, &report.cond2, &report.cond3};
  for (int i = 0; i < 3; ++i) {
    out << "cond" << i + 1 << " " << (conds[i]->holds ? "holds" : "fails") << " "
        << to_string(conds[i]->result.verdict) << "\n";
  }
  return kExitOk;
}

int cmd_henson(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Problem problem = load(config);
  const TheoryDecl& theory = henson_theory(problem);
  if (config.subcommand == "solve") {
    const SolveResult r = make_solver(theory)->decide(problem.instance);
    print_result(single_theory_result(theory.id, problem.instance, r), config.witness, out);
    return kExitOk;
  }
  if (config.subcommand == "reduce-up") {
    if (theory.kind != TheoryKind::kHenson) {
      throw UsageError("reduce-up expects a henson theory");
    }
    Problem reduced;
    reduced.theories.push_back(make_theory(theory.id, TheoryKind::kHensonLoop, theory.forbidden));
    reduced.theories.push_back(make_theory(theory.id + "_ne", TheoryKind::kEquality));
    reduced.instance = build_s_star(problem.instance, theory.symbol("E"));
    out << render_problem(reduced);
    return kExitOk;
  }
  // reduce-down
  const SolveResult r = component_label_solve(problem.instance, theory.forbidden);
  print_result(single_theory_result(theory.id, problem.instance, r), config.witness, out);
  return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows;
  for (const std::string family : {"convex", "mi"}) {
    for (int shared = kBenchMinShared; shared <= kBenchMaxShared; ++shared) {
      rows.push_back(bench_row(family, shared, config));
    }
  }
  out << std::left << std::setw(8) << "family" << std::right << std::setw(8) << "shared"
      << std::setw(10) << "mode" << std::setw(14) << "median_ms" << std::setw(7) << "agree"
      << "\n";
  for (const BenchRow& r : rows) {
    out << std::left << std::setw(8) << r.family << std::right << std::setw(8) << r.shared
        << std::setw(10) << to_string(r.mode) << std::setw(14) << std::fixed
        << std::setprecision(3) << r.median_ms << std::setw(7) << (r.agree ? "yes" : "no")
        << "\n";
  }
  if (config.out.empty()) return kExitOk;
  std::ofstream csv(config.out);
  if (csv) {
    csv << "family,shared_vars,mode,median_ms,agree\n";
    for (const BenchRow& r : rows) {
      csv << r.family << "," << r.shared << "," << to_string(r.mode) << "," << std::fixed
          << std::setprecision(3) << r.median_ms << "," << (r.agree ? "yes" : "no") << "\n";
    }
    csv.flush();
  }
  if (!csv) {
    err << "error: cannot write '" << config.out << "'\n";
    return kExitWrite;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Combined constraint solving over ordered and digraph theories", "qcsp"};
  app.require_subcommand(1);

  std::string mode = "auto";
  auto* solve = app.add_subcommand("solve", "Decide a combined instance");
  solve->add_option("file", config.input)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"auto", "convex", "complete"}));
  solve->add_flag("--witness", config.witness);
  solve->add_flag("--parallel", config.parallel);

  auto* oracle = app.add_subcommand("oracle", "Decide by brute-force superposition");
  oracle->add_option("file", config.input)->required();
  oracle->add_flag("--witness", config.witness);
  oracle->add_flag("--parallel", config.parallel);

  auto* probe = app.add_subcommand("probe-convexity", "Search for a convexity violation");
  probe->add_option("file", config.input)->required();
  probe->add_option("--theory", config.theory);
  probe->add_option("--max-vars", config.max_vars)->required();
  probe->add_option("--max-atoms", config.max_atoms)->required();
  auto* exhaustive = probe->add_flag("--exhaustive", config.exhaustive);
  auto* random = probe->add_option("--random", config.random_count)->check(CLI::PositiveNumber);
  exhaustive->excludes(random);
  probe->add_option("--seed", config.seed);

  auto* cross = app.add_subcommand("cross-check", "Check a cross prevention formula");
  cross->add_option("file", config.input)->required();
  cross->add_option("--theory", config.theory);
  cross->add_option("--free", config.free_vars)->required();

  auto* henson = app.add_subcommand("henson", "Henson digraph tools");
  henson->require_subcommand(1);
  for (const char* name : {"solve", "reduce-up", "reduce-down"}) {
    auto* sub = henson->add_subcommand(name);
    sub->add_option("file", config.input)->required();
    sub->add_flag("--witness", config.witness);
    sub->callback([&config, name] { config.subcommand = name; });
  }

  auto* bench = app.add_subcommand("bench", "Time convex propagation against arrangement search");
  bench->add_option("--seed", config.seed);
  bench->add_option("--out", config.out);
  bench->add_option("--runs", config.runs)->check(CLI::PositiveNumber);
  bench->add_flag("--parallel", config.parallel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.mode = mode == "convex" ? Mode::kConvex
                : mode == "complete" ? Mode::kComplete
                                     : Mode::kAuto;
  config.command = app.get_subcommands().front()->get_name();

  try {
    if (config.command == "solve") return cmd_solve(config, out, err);
    if (config.command == "oracle") return cmd_oracle(config, out, err);
    if (config.command == "probe-convexity") return cmd_probe(config, out, err);
    if (config.command == "cross-check") return cmd_cross_check(config, out, err);
    if (config.command == "henson") return cmd_henson(config, out, err);
    return cmd_bench(config, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConvexityNotDeclared& e) {
    err << "error: " << e.what() << "\n";
    return kExitMode;
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qcsp
