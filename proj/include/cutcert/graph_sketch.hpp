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

// Stream state for k-connectivity certificates.
//
// Each vertex v owns a signed incidence vector x_v over the C(n,2) vertex
// pairs: +1 at (v, b) and -1 at (a, v) for every incident edge. Summing over
// a vertex set S cancels the interior edges, so supp(x_S) = E(S, V \ S).
//
// The sketch keeps, over those vectors,
//   * B = ceil(log2 n) + 2 SupportFind(1, n, m, n^-8) instances, one per
//     Boruvka round of the spanning-forest recovery, and
//   * for r = 1..R, R = ceil(log2 k), one SupportFind(min(2^r, k), n, m, n^-10)
//     instance M_r.
// Every instance has its own seed derived from the master seed.

#ifndef CUTCERT_GRAPH_SKETCH_HPP
#define CUTCERT_GRAPH_SKETCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cutcert/bytes.hpp"
#include "cutcert/edge.hpp"
#include "cutcert/supportfind.hpp"

namespace cutcert {

struct ConnConfig {
  double c = kDefaultTConstant;
  std::size_t w = kDefaultSparsityMultiplier;

  friend bool operator==(const ConnConfig&, const ConnConfig&) = default;
};

/// ceil(log2 k); 0 for k = 1.
unsigned stack_count(std::uint64_t k) noexcept;
/// ceil(log2 n) + 2.
unsigned forest_round_count(std::uint64_t n) noexcept;
/// min(2^r, k).
std::size_t stack_budget(unsigned r, std::size_t k) noexcept;

/// Parameters of every instance (forest rounds first, then M_1..M_R), without
/// allocating anything. Valid for any n >= 2, so it doubles as the size model
/// for parameter points too large to materialise.
std::vector<SupportFindParams> conn_layout(std::size_t n, std::size_t k, std::uint64_t seed,
                                           const ConnConfig& config = {});

struct StackStats {
  std::string name;  // "forest[b]" or "M_r"
  std::size_t budget;
  std::size_t t;
  std::size_t ell;
  unsigned levels;
  std::uint64_t bits;  // serialized bits including the instance header
};

struct ConnStats {
  std::size_t n;
  std::size_t k;
  std::uint64_t m;
  std::vector<StackStats> forest;
  std::vector<StackStats> stacks;
  std::uint64_t forest_bits = 0;
  std::uint64_t stack_bits = 0;
  std::uint64_t total_bits = 0;  // whole serialized sketch
  std::uint64_t sum_t = 0;       // sum of t_r over M_1..M_R
  double comparator = 0;         // max{k, log2 n * log2 k}
};

ConnStats conn_stats(std::size_t n, std::size_t k, const ConnConfig& config = {});

/// Result of a cut query against M_r.
struct CutQuery {
  bool failed = false;
  std::vector<Edge> edges;
};

class ConnSketch {
 public:
  static constexpr std::uint64_t kHeaderBytes = 4 + 1 + 8 * 3 + 8 + 8 + 4 + 4;

  /// Throws InvalidParams unless n >= 2 and 1 <= k <= n - 1.
  ConnSketch(std::size_t n, std::size_t k, std::uint64_t seed, const ConnConfig& config = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const ConnConfig& config() const noexcept { return config_; }
  std::uint64_t dimension() const noexcept { return m_; }
  unsigned stacks() const noexcept { return stacks_; }
  unsigned forest_rounds() const noexcept { return forest_rounds_; }

  /// Forest round b, 0 <= b < forest_rounds().
  const SupportFindSketch& forest(unsigned b) const;
  /// M_r, 1 <= r <= stacks().
  const SupportFindSketch& stack(unsigned r) const;

  /// All instances: forest rounds, then M_1..M_R.
  std::size_t instance_count() const noexcept { return instances_.size(); }
  const SupportFindSketch& instance(std::size_t i) const { return instances_.at(i); }
  SupportFindSketch& instance(std::size_t i) { return instances_.at(i); }

  /// Throws SelfLoop for u == v, IndexOutOfRange for bad vertices.
  void insert(Vertex u, Vertex v) { apply(u, v, +1); }
  void erase(Vertex u, Vertex v) { apply(u, v, -1); }
  /// sign = +1 insertion, -1 deletion.
  void apply(Vertex u, Vertex v, int sign);

  void merge(const ConnSketch& other);

  /// Boruvka over the forest rounds. One query per current component per
  /// round; each round uses a fresh instance so the queries stay
  /// non-adaptive.
  std::vector<Edge> spanning_forest() const;

  /// Up to min{budget, |E(S, V\S)|} crossing edges via M_r.
  CutQuery query_cut_edges(unsigned r, const VertexSet& side, std::size_t budget) const;

  ConnStats stats() const { return conn_stats(n_, k_, config_); }

  Bytes serialize() const;
  static ConnSketch deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const ConnSketch& a, const ConnSketch& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.seed_ == b.seed_ && a.config_ == b.config_ &&
           a.instances_ == b.instances_;
  }

 private:
  ConnSketch(std::size_t n, std::size_t k, std::uint64_t seed, const ConnConfig& config,
             std::vector<SupportFindSketch> instances);
  void check_side(const VertexSet& side) const;

  std::size_t n_;
  std::size_t k_;
  std::uint64_t seed_;
  ConnConfig config_;
  std::uint64_t m_;
  unsigned forest_rounds_;
  unsigned stacks_;
  std::vector<SupportFindSketch> instances_;
};

/// x_v as sorted (coordinate, +-1) entries for the given edge set.
std::vector<RecoveredEntry> incidence_vector(std::size_t n, Vertex v, const std::vector<Edge>& edges);

}  // namespace cutcert

#endif  // CUTCERT_GRAPH_SKETCH_HPP
