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

#ifndef CUTCERT_EDGE_HPP
#define CUTCERT_EDGE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cutcert {

using Vertex = std::uint32_t;          // 1-based
using VertexSet = std::vector<Vertex>;  // ascending, no duplicates

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n * (n - 1) / 2; }

/// Position of pair (a, b), a < b, among all pairs in lexicographic order:
/// (a-1)(2n-a)/2 + (b-a), a bijection onto [1, C(n,2)].
constexpr std::uint64_t edge_index(std::uint64_t n, std::uint64_t a, std::uint64_t b) noexcept {
  return (a - 1) * (2 * n - a) / 2 + (b - a);
}

/// Inverse of edge_index. Throws CorruptData for indices outside [1, C(n,2)],
/// which includes every padding coordinate.
Edge edge_from_index(std::uint64_t n, std::uint64_t index);

/// Smallest power of two >= max(2, C(n,2)).
std::uint64_t padded_dimension(std::uint64_t n) noexcept;

/// Edges with exactly one endpoint in side.
std::vector<Edge> crossing_edges(std::size_t n, const std::vector<Edge>& edges, const VertexSet& side);

/// Membership table of size n+1 (index 0 unused).
std::vector<char> membership(std::size_t n, const VertexSet& side);

}  // namespace cutcert

#endif  // CUTCERT_EDGE_HPP
