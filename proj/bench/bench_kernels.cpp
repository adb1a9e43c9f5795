// Copyright 2026 The densmod Authors. All Rights Reserved.
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

// Parallel kernels against their serial reference. Sizes straddle the
// threshold below which the parallel versions run single-threaded.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "densmod/kernels.hpp"

namespace {

using namespace densmod;

std::vector<VertexEdge> random_edges(std::size_t n, double p) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution keep(p);
  std::vector<VertexEdge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (keep(rng)) edges.push_back({u, v});
  return edges;
}

Eigen::MatrixXd random_matrix(Eigen::Index n) {
  std::srand(static_cast<unsigned>(n));
  return Eigen::MatrixXd::Random(n, n);
}

template <auto Fn>
void BM_Laplacian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto edges = random_edges(n, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(n, edges));
  state.counters["edges"] = static_cast<double>(edges.size());
}

template <auto Fn>
void BM_OuterSum(benchmark::State& state) {
  const auto n = state.range(0);
  const auto v = random_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(v, static_cast<std::size_t>(n / 4)));
}

template <auto Fn>
void BM_WeightedOuterSum(benchmark::State& state) {
  const auto n = state.range(0);
  const auto v = random_matrix(n);
  const Eigen::VectorXd w = Eigen::VectorXd::LinSpaced(n, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(w, v));
}

template <auto Fn>
void BM_MaxAbsProduct(benchmark::State& state) {
  const auto n = state.range(0);
  const auto a = random_matrix(n);
  const Eigen::MatrixXd b = a.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
}

template <auto Fn>
void BM_MaxAbsDiff(benchmark::State& state) {
  const auto n = state.range(0);
  const auto a = random_matrix(n);
  const Eigen::MatrixXd b = a.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
}

#define DENSMOD_BENCH_PAIR(name, parallel_fn, serial_fn)                                  \
  BENCHMARK_TEMPLATE(name, parallel_fn)->Name(#name "/parallel")->RangeMultiplier(4)->Range(16, 1024); \
  BENCHMARK_TEMPLATE(name, serial_fn)->Name(#name "/serial")->RangeMultiplier(4)->Range(16, 1024)

DENSMOD_BENCH_PAIR(BM_Laplacian, kernels::laplacian_from_edges, kernels::serial::laplacian_from_edges);
DENSMOD_BENCH_PAIR(BM_OuterSum, kernels::outer_sum, kernels::serial::outer_sum);
DENSMOD_BENCH_PAIR(BM_WeightedOuterSum, kernels::weighted_outer_sum,
                   kernels::serial::weighted_outer_sum);
DENSMOD_BENCH_PAIR(BM_MaxAbsProduct, kernels::max_abs_product, kernels::serial::max_abs_product);
DENSMOD_BENCH_PAIR(BM_MaxAbsDiff, kernels::max_abs_diff, kernels::serial::max_abs_diff);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::AddCustomContext("threads", std::to_string(kernels::thread_count()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
