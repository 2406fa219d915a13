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

// Data-parallel inner loops. Each kernel has an OpenMP version (the one the
// library calls) and a plain serial version in `kernels::serial` that tests
// and benchmarks compare against. Both produce identical output.

#ifndef CUTCERT_KERNELS_HPP
#define CUTCERT_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cutcert/field.hpp"

namespace cutcert::kernels {

/// syndromes[j] += u * alpha^j for j = 0..size-1 (one sparse-recovery update).
void accumulate_powers(std::span<std::uint64_t> syndromes, FieldElement alpha, FieldElement u);

/// out[j] = sum over rows r of rows[r][j] in F_p. All rows share out's length.
void sum_rows(std::span<const std::uint64_t* const> rows, std::span<std::uint64_t> out);

/// Vertex sets are bit masks over n <= 31 vertices, vertex v at bit v-1.
/// adjacency[v] is the neighbour mask of vertex v+1 (multiplicity ignored).
/// Returns every mask S with bit 0 set, S != all, whose cut size is below
/// threshold, in increasing mask order.
std::vector<std::uint32_t> small_cuts(std::span<const std::uint32_t> adjacency,
                                      std::uint32_t threshold);

/// Cut size of one mask.
std::uint32_t cut_size(std::span<const std::uint32_t> adjacency, std::uint32_t mask) noexcept;

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads() noexcept;

namespace serial {

void accumulate_powers(std::span<std::uint64_t> syndromes, FieldElement alpha, FieldElement u);
void sum_rows(std::span<const std::uint64_t* const> rows, std::span<std::uint64_t> out);
std::vector<std::uint32_t> small_cuts(std::span<const std::uint32_t> adjacency,
                                      std::uint32_t threshold);

}  // namespace serial

}  // namespace cutcert::kernels

#endif  // CUTCERT_KERNELS_HPP
