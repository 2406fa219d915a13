// Copyright 2026 The cutcert Authors
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

// Serial reference kernels against the OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cutcert/graph_sketch.hpp"
#include "cutcert/kernels.hpp"

namespace {

using namespace cutcert;

template <bool Parallel>
void BM_AccumulatePowers(benchmark::State& state) {
  std::vector<std::uint64_t> syndromes(static_cast<std::size_t>(state.range(0)), 0);
  const auto alpha = FieldElement::from_u64(12345);
  const auto u = FieldElement::from_signed(-1);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::accumulate_powers(syndromes, alpha, u);
    else
      kernels::serial::accumulate_powers(syndromes, alpha, u);
    benchmark::DoNotOptimize(syndromes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_SumRows(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto count = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(7);
  std::vector<std::vector<std::uint64_t>> data(count, std::vector<std::uint64_t>(width));
  for (auto& row : data)
    for (auto& w : row) w = rng() % kModulus;
  std::vector<const std::uint64_t*> rows;
  for (const auto& row : data) rows.push_back(row.data());
  std::vector<std::uint64_t> out(width);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::sum_rows(rows, out);
    else
      kernels::serial::sum_rows(rows, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width * count));
}

template <bool Parallel>
void BM_SmallCuts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::vector<std::uint32_t> adjacency(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 2) {
        adjacency[u] |= 1u << v;
        adjacency[v] |= 1u << u;
      }
  for (auto _ : state) {
    auto cuts = Parallel ? kernels::small_cuts(adjacency, 4) : kernels::serial::small_cuts(adjacency, 4);
    benchmark::DoNotOptimize(cuts.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}

void BM_IngestUpdate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ConnSketch sketch(n, static_cast<std::size_t>(state.range(1)), 1);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto u = static_cast<Vertex>(1 + rng() % n);
    auto v = static_cast<Vertex>(1 + rng() % n);
    if (v == u) v = u % n + 1;
    sketch.apply(u, v, +1);
  }
}

BENCHMARK(BM_AccumulatePowers<false>)->Arg(64)->Arg(1024)->Arg(16384);
BENCHMARK(BM_AccumulatePowers<true>)->Arg(64)->Arg(1024)->Arg(16384);
BENCHMARK(BM_SumRows<false>)->Args({608, 16})->Args({4096, 64});
BENCHMARK(BM_SumRows<true>)->Args({608, 16})->Args({4096, 64});
BENCHMARK(BM_SmallCuts<false>)->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_SmallCuts<true>)->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_IngestUpdate)->Args({16, 3})->Args({64, 8});

}  // namespace

BENCHMARK_MAIN();
