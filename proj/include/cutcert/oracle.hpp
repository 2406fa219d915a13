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

// Exact ground truth for everything the sketches estimate. Nothing in here is
// streaming or space-bounded.

#ifndef CUTCERT_ORACLE_HPP
#define CUTCERT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cutcert/certify.hpp"
#include "cutcert/edge.hpp"
#include "cutcert/sparse_recovery.hpp"

namespace cutcert {

/// The graph a stream describes. In strict mode multiplicities stay in {0, 1}:
/// inserting a present edge or deleting an absent one throws StrictViolation.
class ExactGraph {
 public:
  explicit ExactGraph(std::size_t n, bool strict = true);

  std::size_t n() const noexcept { return n_; }
  bool strict() const noexcept { return strict_; }

  void insert(Vertex u, Vertex v) { apply(u, v, +1); }
  void erase(Vertex u, Vertex v) { apply(u, v, -1); }
  void apply(Vertex u, Vertex v, int sign);

  std::int64_t multiplicity(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  /// Edges with positive multiplicity, sorted.
  std::vector<Edge> edges() const;

 private:
  std::size_t slot(Vertex u, Vertex v) const;
  std::size_t n_;
  bool strict_;
  std::vector<std::int64_t> mult_;
};

struct MinCut {
  std::uint64_t value = 0;
  VertexSet side;  // contains vertex 1
};

/// Global minimum cut by Stoer-Wagner. For a disconnected graph returns value
/// 0 and the component of vertex 1. The witness is the first minimum phase
/// found, flipped to contain vertex 1.
MinCut exact_min_cut(std::size_t n, const std::vector<Edge>& edges);

/// Minimum over all 2^(n-1) - 1 canonical sides; lexicographically smallest
/// side among ties. n <= 22.
MinCut exhaustive_min_cut(std::size_t n, const std::vector<Edge>& edges);

/// lambda(G) >= k. False for disconnected graphs whenever k >= 1.
bool is_k_edge_connected(std::size_t n, const std::vector<Edge>& edges, std::size_t k);

struct Verdict {
  bool valid = false;
  std::string reason;  // empty when valid

  static Verdict ok() { return {true, {}}; }
  static Verdict invalid(std::string why) { return {false, std::move(why)}; }
};

/// Checks a certificate against the true graph for target k.
///   Positive:             G is k-connected ("wrong branch" otherwise), H is a
///                         subgraph of G, H spans V and H is k-connected.
///   NegativeCut:          G is not k-connected, E_S is exactly E_G(S) and
///                         |E_S| < k.
///   NegativeDisconnected: G is not k-connected, C is proper and nonempty
///                         and has no crossing edge.
Verdict validate_certificate(const ExactGraph& graph, std::size_t k, const Certificate& cert);

/// supp(sum_{i in S} x_i) for explicit sparse vectors (index -> value).
std::set<std::uint64_t> exact_support(const std::vector<std::map<std::uint64_t, std::int64_t>>& vectors,
                                      const std::vector<std::size_t>& subset);

/// Coordinates of E(S, V \ S) under edge_index.
std::set<std::uint64_t> exact_support(std::size_t n, const std::vector<Edge>& edges, const VertexSet& side);

}  // namespace cutcert

#endif  // CUTCERT_ORACLE_HPP
