// Copyright 2026 The qlcst Authors
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

#include "qlcst/generators.hpp"
#include "qlcst/qlct.hpp"
#include "qlcst/stransform.hpp"

namespace {

using namespace qlcst;

const ParamMatrix& fresnel() {
  static const ParamMatrix m = ParamMatrix::validate(1, 2, 0, 1);
  return m;
}

QSignal2D signal(std::size_t n) {
  GeneratorSpec s;
  s.kind = GeneratorSpec::Kind::RandomHermite;
  return gen_signal(s, square(midpoint_grid(n, 8.0)));
}

void BM_QlctFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = signal(n);
  const Grid2D u = default_spectral_grid(f.grid(), fresnel(), fresnel());
  for (auto _ : state) benchmark::DoNotOptimize(qlct_fast_forward(f, fresnel(), fresnel(), u));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QlctFast)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_QlctSeparable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = signal(n);
  const Grid2D u = default_spectral_grid(f.grid(), fresnel(), fresnel());
  for (auto _ : state) benchmark::DoNotOptimize(qlct_separable_forward(f, fresnel(), fresnel(), u));
}
BENCHMARK(BM_QlctSeparable)->RangeMultiplier(2)->Range(16, 128);

void BM_QlctDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = signal(n);
  const Grid2D u = default_spectral_grid(f.grid(), fresnel(), fresnel());
  for (auto _ : state) benchmark::DoNotOptimize(qlct_forward(f, fresnel(), fresnel(), u));
}
BENCHMARK(BM_QlctDirect)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_QlcstSlice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = signal(n);
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const Grid2D w = default_spectral_grid(f.grid(), fresnel(), fresnel());
  for (auto _ : state) benchmark::DoNotOptimize(qlcst_slice(f, psi, fresnel(), fresnel(), 0.5, -0.5, w));
}
BENCHMARK(BM_QlcstSlice)->RangeMultiplier(2)->Range(16, 128);

void BM_QlcstForward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = signal(n);
  const auto method = static_cast<QlcstMethod>(state.range(1));
  const WindowSpec psi = WindowSpec::fixed_gaussian(1, 1);
  const Grid2D w = default_spectral_grid(f.grid(), fresnel(), fresnel());
  for (auto _ : state) benchmark::DoNotOptimize(qlcst_forward(f, psi, fresnel(), fresnel(), f.grid(), w, method));
}
BENCHMARK(BM_QlcstForward)
    ->ArgsProduct({{16, 32}, {static_cast<long>(QlcstMethod::Slice), static_cast<long>(QlcstMethod::Separable)}})
    ->Unit(benchmark::kMillisecond);

void BM_QlcstReconstruct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QSignal2D f = signal(n);
  const auto c = qlcst_forward(f, WindowSpec::fixed_gaussian(1, 1), fresnel(), fresnel());
  for (auto _ : state) benchmark::DoNotOptimize(qlcst_reconstruct(c));
}
BENCHMARK(BM_QlcstReconstruct)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
