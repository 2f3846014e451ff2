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

// Serial reference kernels against their OpenMP counterparts:
// arrangement search and brute-force superposition.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "families.h"
#include "qcsp/combine.h"
#include "qcsp/oracle.h"

namespace qcsp {
namespace {

// Temporal {mi, lt, leq} + point algebra + equality instances that use
// exactly `vars` variables. Serial and parallel runs see the same batch.
std::vector<CombinedProblem> batch(int vars, int size) {
  const TheoryDecl t = testing::mi_theory("t");
  const TheoryDecl p = testing::pa_theory("p");
  const TheoryDecl e = testing::eq_theory("e");
  std::mt19937_64 rng(static_cast<std::uint64_t>(vars) * 977u);
  std::vector<CombinedProblem> out;
  while (static_cast<int>(out.size()) < size) {
    Instance s = testing::random_temporal_instance(rng, t, vars, vars + 2);
    const Instance orders = testing::random_convex_instance(rng, vars, false);
    for (const Atom& a : orders.atoms()) s.add(a);
    if (static_cast<int>(s.variables().size()) < vars) continue;
    out.push_back(make_combined({t, p, e}, s));
  }
  return out;
}

void BM_SolveComplete(benchmark::State& state) {
  const auto problems = batch(static_cast<int>(state.range(0)), 16);
  const SolveOptions options{state.range(1) != 0, true};
  for (auto _ : state) {
    for (const CombinedProblem& cp : problems) {
      benchmark::DoNotOptimize(solve_complete(cp, options).verdict);
    }
  }
  state.SetLabel(options.parallel ? "parallel" : "serial");
}
BENCHMARK(BM_SolveComplete)
    ->ArgsProduct({{4, 6, 7}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_Superpose(benchmark::State& state) {
  const auto problems = batch(static_cast<int>(state.range(0)), 8);
  const OracleOptions options{state.range(1) != 0, 0};
  for (auto _ : state) {
    for (const CombinedProblem& cp : problems) {
      benchmark::DoNotOptimize(superpose_bruteforce(cp, options).verdict);
    }
  }
  state.SetLabel(options.parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Superpose)->ArgsProduct({{4, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qcsp

BENCHMARK_MAIN();
