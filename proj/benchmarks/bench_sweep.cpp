// Copyright 2026 The liaison Authors
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

#include <benchmark/benchmark.h>

#include "liaison/bounds.hpp"

namespace liaison {
namespace {

void BM_Sweep(benchmark::State& state, SweepFamily family, int n_max, int dmax) {
  SweepOptions o;
  o.family = family;
  o.n_min = 3;
  o.n_max = n_max;
  o.dmax = dmax;
  o.threads = static_cast<int>(state.range(0));
  std::uint64_t checks = 0;
  for (auto _ : state) checks = sweep(o).checks;
  state.counters["checks"] = static_cast<double>(checks);
  state.counters["checks/s"] = benchmark::Counter(static_cast<double>(checks), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK_CAPTURE(BM_Sweep, collinear, SweepFamily::kCollinear, 7, 9)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Sweep, three_points, SweepFamily::kThreePoints, 6, 9)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Sweep, lemmas, SweepFamily::kLemmas, 8, 10)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace liaison
