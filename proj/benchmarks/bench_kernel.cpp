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

#include "liaison/groebner.hpp"
#include "liaison/linkage.hpp"
#include "liaison/random.hpp"
#include "liaison/resolution.hpp"

namespace liaison {
namespace {

// n random quadrics in n + 1 variables.
std::vector<Polynomial> random_quadrics(int n, std::uint64_t seed) {
  const Ring R(kDefaultPrime, n + 1);
  CounterRng rng(seed);
  std::vector<Polynomial> out;
  for (int k = 0; k < n; ++k) {
    Polynomial f(R);
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const auto m = Monomial::variable(n + 1, i) * Monomial::variable(n + 1, j);
        f += Polynomial::term(R, m, static_cast<Coeff>(1 + rng.below(kDefaultPrime - 1)));
      }
    }
    out.push_back(f);
  }
  return out;
}

void BM_BuchbergerQuadrics(benchmark::State& state) {
  const auto gens = random_quadrics(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerQuadrics)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ThreePointResolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Ring R(kDefaultPrime, n + 1);
  auto x = [&](int i) { return Polynomial::variable(R, i); };
  std::vector<Polynomial> gens;
  for (int i = 3; i <= n; ++i) gens.push_back(x(i));
  gens.push_back(x(0) * x(1));
  gens.push_back(x(0) * x(2));
  gens.push_back(x(1) * x(2));
  const Ideal I(R, gens);
  for (auto _ : state) benchmark::DoNotOptimize(minimalize(free_resolution(I)));
}
BENCHMARK(BM_ThreePointResolution)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RealizeAndCheck(benchmark::State& state) {
  const auto ci = CIType::make({2, 3, static_cast<int>(state.range(0))});
  const auto spec = LinkSpec::collinear(ci, 2);
  for (auto _ : state) {
    const auto inst = realize(spec, kDefaultPrime, 1);
    benchmark::DoNotOptimize(oracle_check(inst));
  }
}
BENCHMARK(BM_RealizeAndCheck)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace liaison
