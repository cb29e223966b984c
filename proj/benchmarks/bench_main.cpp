// Copyright 2026 The wvphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "wvphase/geometric_phase.hpp"
#include "wvphase/pointer.hpp"
#include "wvphase/protocol.hpp"
#include "wvphase/sic.hpp"
#include "wvphase/weak_values.hpp"

using namespace wvphase;

static void BM_ProjectorWeakValue(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Ket w = haar_random_ket(d, 1), pre = haar_random_ket(d, 2), post = haar_random_ket(d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(projector_weak_value(w, pre, post));
}
BENCHMARK(BM_ProjectorWeakValue)->Arg(2)->Arg(3)->Arg(8);

static void BM_Bargmann3(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Ket a = haar_random_ket(d, 1), b = haar_random_ket(d, 2), c = haar_random_ket(d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bargmann(a, b, c));
}
BENCHMARK(BM_Bargmann3)->Arg(2)->Arg(5);

static void BM_GeodesicTriangle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ket a = haar_random_ket(3, 1), b = haar_random_ket(3, 2), c = haar_random_ket(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_triangle_phase(a, b, c, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GeodesicTriangle)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

static void BM_QutritCensus(benchmark::State& state) {
  const SicSet set = builtin_sic(3);
  for (auto _ : state) benchmark::DoNotOptimize(triple_phase_census(set));
}
BENCHMARK(BM_QutritCensus);

static void BM_QutritComposition(benchmark::State& state) {
  const SicSet set = builtin_sic(3);
  for (auto _ : state) benchmark::DoNotOptimize(phase_composition_check(set));
}
BENCHMARK(BM_QutritComposition);

static void BM_CoupleAndPostselect(benchmark::State& state) {
  const SicSet set = builtin_sic(2);
  const Grid grid = default_grid(1.0, 0.01);
  for (auto _ : state) {
    const PointerState s = couple_and_postselect(set[1], set[0], set[2], 0.01, 1.0, grid);
    benchmark::DoNotOptimize(pointer_means(s));
  }
}
BENCHMARK(BM_CoupleAndPostselect);

static void BM_Protocol(benchmark::State& state) {
  const SicSet set = builtin_sic(2);
  ProtocolConfig c;
  c.shots_x = c.shots_p = state.range(0);
  c.seed = 7;
  c.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(protocol_run(set, c));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_Protocol)->Args({100000, 1})->Args({1000000, 1})->Args({1000000, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
