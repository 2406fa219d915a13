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

// End-of-stream certificate construction.
//
//   G_0 <- spanning forest from the forest rounds.
//   If G_0 is disconnected: the component of vertex 1 is a cut with no
//   crossing edges.
//   For r = 1..R, with threshold T_r = min(2^r, k):
//     list every cut S of G_{r-1} with |E_{G_{r-1}}(S)| < T_r,
//     ask M_r for up to T_r crossing edges of each S (all queries of a round
//     are fixed before the first is answered),
//     if some S gets fewer than T_r edges, those are all of E_G(S): report it,
//     otherwise G_r <- G_{r-1} plus every returned edge.
//   G_R is k-edge-connected.

#ifndef CUTCERT_CERTIFY_HPP
#define CUTCERT_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cutcert/edge.hpp"
#include "cutcert/graph_sketch.hpp"

namespace cutcert {

enum class CertificateKind { Positive, NegativeCut, NegativeDisconnected };

const char* to_string(CertificateKind kind) noexcept;

struct RoundStats {
  unsigned round = 0;
  std::size_t threshold = 0;
  std::size_t cuts = 0;         // |S_r|
  std::size_t edges_added = 0;  // new edges in G_r
  std::size_t edges_total = 0;  // |G_r|

  friend bool operator==(const RoundStats&, const RoundStats&) = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::Positive;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  VertexSet side;           // S or C for the negative kinds
  std::vector<Edge> edges;  // H, or E_S
  std::size_t forest_edges = 0;
  std::vector<RoundStats> rounds;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Number of edges carried by the certificate (|H|, |E_S| or 0).
std::size_t certificate_edge_count(const Certificate& cert) noexcept;

struct Cut {
  VertexSet side;  // contains vertex 1, proper subset
  std::size_t size = 0;

  friend bool operator==(const Cut&, const Cut&) = default;
};

enum class CutMode { Auto, Exhaustive, Contraction };

struct CutOptions {
  CutMode mode = CutMode::Auto;
  std::uint64_t seed = 0;               // contraction randomness
  std::size_t base_vertices = 6;        // contract down to this many super-vertices
  std::size_t first_batch = 64;         // trials in the first batch
  std::size_t max_trials = 1 << 20;
};

inline constexpr std::size_t kMaxExhaustiveVertices = 22;

/// Every canonical cut of (n, edges) with size below threshold, sorted
/// lexicographically by side. Exhaustive mode scans all 2^(n-1) sides;
/// contraction mode runs randomized contraction trials in doubling batches
/// until a batch adds nothing new. Throws BudgetExceeded past 16 n^4 cuts.
std::vector<Cut> enumerate_small_cuts(std::size_t n, const std::vector<Edge>& edges,
                                      std::size_t threshold, const CutOptions& options = {});

struct CertifyOptions {
  CutOptions cuts;
  bool keep_round_graphs = false;
};

struct CertifyTrace {
  std::vector<Edge> forest;
  std::vector<std::vector<Edge>> round_graphs;  // G_1..G_r as reached
  std::vector<std::vector<Cut>> round_cuts;     // S_1..S_r
};

/// Throws Error(CertifyFailed) when a round query fails outright.
Certificate build_certificate(const ConnSketch& sketch, const CertifyOptions& options = {},
                              CertifyTrace* trace = nullptr);

}  // namespace cutcert

#endif  // CUTCERT_CERTIFY_HPP
