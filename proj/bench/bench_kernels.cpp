// Copyright 2026 The mconvex Authors
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

// Serial reference vs OpenMP kernels. Second argument: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "mconvex/fast_tester.hpp"
#include "mconvex/generators.hpp"
#include "mconvex/oracle.hpp"
#include "mconvex/scans.hpp"

namespace mconvex {
namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::kSerial : Exec::kParallel; }

void BM_Normalize(benchmark::State& state) {
  const QuadraticInstance inst = gen_tree_metric_type1(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_type1(inst, exec_of(state)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->ArgsProduct({{400, 1600, 3200}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadraticInstance inst = gen_tree_metric_type1(n, n / 2, 2);
  Policy policy;
  policy.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(test_mconvexity(inst, policy));
}
BENCHMARK(BM_Pipeline)->ArgsProduct({{400, 1600, 3200}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_AntiTreeMetricScan(benchmark::State& state) {
  const QuadraticInstance inst = gen_tree_metric_type1(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(scan_anti_tree_metric(inst.quad(), {}, exec_of(state)));
}
BENCHMARK(BM_AntiTreeMetricScan)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Type2Scan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadraticInstance inst = gen_linear_typed({n / 2, n / 4, n - n / 2 - n / 4 - 2, 1, 1}, 4, 4);
  const auto d = decompose_components(build_infinity_graph(inst));
  for (auto _ : state) benchmark::DoNotOptimize(scan_type2_equalities(inst.quad(), d, {}, exec_of(state)));
}
BENCHMARK(BM_Type2Scan)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ExchangeOracle(benchmark::State& state) {
  const QuadraticInstance inst = gen_tree_metric_type1(static_cast<int>(state.range(0)), 4, 5);
  OracleOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(exchange_axiom_holds(inst, options));
}
BENCHMARK(BM_ExchangeOracle)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mconvex

BENCHMARK_MAIN();
