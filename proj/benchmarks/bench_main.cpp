// Copyright 2026 The aplab Authors.
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

#include <vector>

#include <benchmark/benchmark.h>

#include "aplab/bohr.hpp"
#include "aplab/density.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"
#include "aplab/increment.hpp"

namespace {

using namespace aplab;

void BM_DftCyclic(benchmark::State& state) {
  const Group g = Group::cyclic(static_cast<std::uint32_t>(state.range(0)));
  const GFunc f = indicator(random_set(g, 0.3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_DftCyclic)->Arg(1024)->Arg(1009)->Arg(4093)->Arg(4096)->Arg(65537);

void BM_DftVectorSpace(benchmark::State& state) {
  const Group g = Group::vector_space(3, static_cast<std::uint32_t>(state.range(0)));
  const GFunc f = indicator(random_set(g, 0.3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_DftVectorSpace)->DenseRange(4, 10, 2);

void BM_Count3apsCyclic(benchmark::State& state) {
  const Group g = Group::cyclic(static_cast<std::uint32_t>(state.range(0)));
  const SubsetG a = random_set(g, 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_3aps(a));
}
BENCHMARK(BM_Count3apsCyclic)->Arg(1009)->Arg(20011)->Arg(200003);

void BM_Count3apsVectorSpace(benchmark::State& state) {
  const Group g = Group::vector_space(3, static_cast<std::uint32_t>(state.range(0)));
  const SubsetG a = random_set(g, 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_3aps(a));
}
BENCHMARK(BM_Count3apsVectorSpace)->Arg(6)->Arg(9);

void BM_FindRegular(benchmark::State& state) {
  const Group g = Group::cyclic(4093);
  std::vector<Index> freqs = {1, 77, 1234};
  freqs.resize(static_cast<std::size_t>(state.range(0)));
  const BohrSet b = bohr_set(g, freqs, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(find_regular(b));
}
BENCHMARK(BM_FindRegular)->DenseRange(1, 3);

void BM_BootstrapFfq(benchmark::State& state) {
  const PlantedInstance inst = planted_instance(Group::vector_space(3, 5), 2, 0.05, 0.05, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bootstrap_ffq(inst.a, inst.a1, inst.a2, inst.s, 0.05));
  }
}
BENCHMARK(BM_BootstrapFfq)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
