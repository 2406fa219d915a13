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

#include "cutcert/kernels.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cutcert::kernels {

namespace {

// Below these sizes the fork/join cost dominates.
constexpr std::size_t kPowersParallelMin = 1 << 14;
constexpr std::size_t kSumParallelMin = 1 << 15;
constexpr std::uint32_t kCutsParallelMinVertices = 14;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = a + b;
  return r >= kModulus ? r - kModulus : r;
}

void powers_range(std::uint64_t* syn, std::size_t begin, std::size_t end, FieldElement alpha,
                  FieldElement start) {
  FieldElement cur = start;
  for (std::size_t j = begin; j < end; ++j) {
    syn[j] = add(syn[j], cur.value());
    cur *= alpha;
  }
}

void cuts_range(std::span<const std::uint32_t> adjacency, std::uint32_t threshold,
                std::uint32_t begin, std::uint32_t end, std::vector<std::uint32_t>& out) {
  for (std::uint32_t x = begin; x < end; ++x) {
    const std::uint32_t mask = (x << 1) | 1u;
    if (cut_size(adjacency, mask) < threshold) out.push_back(mask);
  }
}

}  // namespace

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::uint32_t cut_size(std::span<const std::uint32_t> adjacency, std::uint32_t mask) noexcept {
  std::uint32_t total = 0;
  std::uint32_t rest = mask;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    total += static_cast<std::uint32_t>(std::popcount(adjacency[static_cast<std::size_t>(v)] & ~mask));
  }
  return total;
}

void accumulate_powers(std::span<std::uint64_t> syndromes, FieldElement alpha, FieldElement u) {
  const std::size_t size = syndromes.size();
  if (size < kPowersParallelMin || max_threads() == 1) {
    serial::accumulate_powers(syndromes, alpha, u);
    return;
  }
  std::uint64_t* syn = syndromes.data();
#pragma omp parallel
  {
#ifdef _OPENMP
    const std::size_t threads = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t id = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t threads = 1, id = 0;
#endif
    const std::size_t chunk = (size + threads - 1) / threads;
    const std::size_t begin = std::min(size, id * chunk);
    const std::size_t end = std::min(size, begin + chunk);
    if (begin < end) powers_range(syn, begin, end, alpha, u * pow(alpha, begin));
  }
}

void sum_rows(std::span<const std::uint64_t* const> rows, std::span<std::uint64_t> out) {
  const std::size_t width = out.size();
  const std::size_t count = rows.size();
  const std::uint64_t* const* r = rows.data();
  std::uint64_t* o = out.data();
  const bool go_parallel = width * count >= kSumParallelMin;
#pragma omp parallel for schedule(static) if (go_parallel)
  for (std::size_t j = 0; j < width; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < count; ++k) acc = add(acc, r[k][j]);
    o[j] = acc;
  }
}

std::vector<std::uint32_t> small_cuts(std::span<const std::uint32_t> adjacency,
                                      std::uint32_t threshold) {
  const auto n = static_cast<std::uint32_t>(adjacency.size());
  if (n < kCutsParallelMinVertices || max_threads() == 1) return serial::small_cuts(adjacency, threshold);

  const std::uint32_t total = (std::uint32_t{1} << (n - 1)) - 1;  // excludes S = V
  const int threads = max_threads();
  std::vector<std::vector<std::uint32_t>> parts(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto id = static_cast<std::uint32_t>(omp_get_thread_num());
    const auto nt = static_cast<std::uint32_t>(omp_get_num_threads());
#else
    const std::uint32_t id = 0, nt = 1;
#endif
    const std::uint32_t chunk = (total + nt - 1) / nt;
    const std::uint32_t begin = std::min(total, id * chunk);
    const std::uint32_t end = std::min(total, begin + chunk);
    cuts_range(adjacency, threshold, begin, end, parts[id]);
  }
  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

namespace serial {

void accumulate_powers(std::span<std::uint64_t> syndromes, FieldElement alpha, FieldElement u) {
  powers_range(syndromes.data(), 0, syndromes.size(), alpha, u);
}

void sum_rows(std::span<const std::uint64_t* const> rows, std::span<std::uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  for (const std::uint64_t* row : rows)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = add(out[j], row[j]);
}

std::vector<std::uint32_t> small_cuts(std::span<const std::uint32_t> adjacency,
                                      std::uint32_t threshold) {
  const auto n = static_cast<std::uint32_t>(adjacency.size());
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  cuts_range(adjacency, threshold, 0, (std::uint32_t{1} << (n - 1)) - 1, out);
  return out;
}

}  // namespace serial

}  // namespace cutcert::kernels
