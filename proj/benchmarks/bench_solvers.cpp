// Copyright 2026 The kgalign Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "kgalign/matrix_prep.hpp"
#include "kgalign/pipeline.hpp"
#include "kgalign/ranking.hpp"
#include "kgalign/solver.hpp"
#include "kgalign/synthetic.hpp"

namespace {

using namespace kgalign;

AdjacencyMatrix synthetic_adjacency(std::size_t n) {
  SyntheticParams p;
  p.seed = 7;
  p.m1 = p.m2 = n;
  p.dimension = 64;
  p.noise = 0.3;
  const auto d = make_synthetic(p);
  return prepare_adjacency(fused_similarity(d.side1, d.side2, FusionWeights::defaults()),
                           AlignOptions{});
}

AdjacencyMatrix uniform_adjacency(std::size_t n) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(n, n);
  for (double& x : m.values()) x = u(rng);
  return AdjacencyMatrix::from_square(std::move(m), Objective::Max);
}

void BM_LapjvSynthetic(benchmark::State& state) {
  const auto a = synthetic_adjacency(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_lapjv(a));
}
BENCHMARK(BM_LapjvSynthetic)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_LapjvUniform(benchmark::State& state) {
  const auto a = uniform_adjacency(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_lapjv(a));
}
BENCHMARK(BM_LapjvUniform)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Sinkhorn(benchmark::State& state) {
  const auto a = synthetic_adjacency(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_sinkhorn(a));
}
BENCHMARK(BM_Sinkhorn)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FusedSimilarity(benchmark::State& state) {
  SyntheticParams p;
  p.m1 = p.m2 = static_cast<std::size_t>(state.range(0));
  p.dimension = 64;
  const auto d = make_synthetic(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fused_similarity(d.side1, d.side2, FusionWeights::defaults()));
  }
}
BENCHMARK(BM_FusedSimilarity)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RankAlignment(benchmark::State& state) {
  const auto a = synthetic_adjacency(static_cast<std::size_t>(state.range(0)));
  const auto asg = solve_lapjv(a);
  for (auto _ : state) benchmark::DoNotOptimize(rank_alignment(a, asg));
}
BENCHMARK(BM_RankAlignment)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
