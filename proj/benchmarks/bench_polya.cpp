// Copyright 2026 The polya-cert Authors
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

#include "polya/approx.hpp"
#include "polya/bessel.hpp"
#include "polya/certificate.hpp"
#include "polya/lattice.hpp"

using polya::Rational;

static void BM_SimplestIn(benchmark::State& state) {
  const Rational lo(69, 500), hi(71, 500);
  for (auto _ : state) benchmark::DoNotOptimize(polya::simplest_in(lo, hi));
}
BENCHMARK(BM_SimplestIn);

static void BM_SqrtBounds(benchmark::State& state) {
  const Rational x(1355, 676);
  const Rational eps(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polya::sqrt_bounds(x, eps));
}
BENCHMARK(BM_SqrtBounds)->Arg(1000)->Arg(1000000);

static void BM_ArccosBounds(benchmark::State& state) {
  const Rational x(2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(polya::arccos_bounds(x, Rational(1, 1000)));
}
BENCHMARK(BM_ArccosBounds);

static void BM_NeumannLowerCount(benchmark::State& state) {
  const Rational lambda(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polya::lattice::count_neumann2_certified_lower(lambda));
}
BENCHMARK(BM_NeumannLowerCount)->Arg(14)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_DirichletCount3D(benchmark::State& state) {
  const Rational lambda(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polya::lattice::count_weighted(3, polya::BoundKind::kDirichlet, lambda));
  }
}
BENCHMARK(BM_DirichletCount3D)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Certify3To14(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(polya::proof::certify(Rational(3), Rational(14)));
}
BENCHMARK(BM_Certify3To14)->Unit(benchmark::kMillisecond);

static void BM_Verify3To14(benchmark::State& state) {
  const auto cert = polya::proof::certify(Rational(3), Rational(14));
  for (auto _ : state) benchmark::DoNotOptimize(polya::proof::verify_certificate(cert, Rational(1, 1000)));
}
BENCHMARK(BM_Verify3To14)->Unit(benchmark::kMillisecond);

static void BM_CountZeros(benchmark::State& state) {
  const polya::oracle::ZeroCountQuery q{static_cast<double>(state.range(0)), 100.0, false};
  for (auto _ : state) benchmark::DoNotOptimize(polya::oracle::count_zeros(q));
}
BENCHMARK(BM_CountZeros)->Arg(0)->Arg(50)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
