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

#include "cutcert/graph_sketch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

#include "cutcert/error.hpp"

namespace cutcert {

namespace {

constexpr char kMagic[] = "CCCS";
constexpr std::uint8_t kVersion = 1;

// Forest rounds fail with probability n^-8 per query; with at most n queries
// in each of the B = O(log n) rounds the union bound stays below 16 n^-6.
constexpr std::uint32_t kForestDeltaExponent = 8;
constexpr std::uint32_t kStackDeltaExponent = 10;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t double_bits(double d) {
  std::uint64_t u;
  std::memcpy(&u, &d, sizeof u);
  return u;
}

double bits_double(std::uint64_t u) {
  double d;
  std::memcpy(&d, &u, sizeof d);
  return d;
}

std::vector<std::size_t> as_indices(const VertexSet& side) {
  return {side.begin(), side.end()};
}

void validate_conn(std::size_t n, std::size_t k) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "need at least two vertices");
  if (k < 1 || k > n - 1)
    throw Error(ErrorCode::InvalidParams,
                "k must lie in [1, n-1], got k=" + std::to_string(k) + " n=" + std::to_string(n));
}

std::vector<SupportFindSketch> build_instances(std::size_t n, std::size_t k, std::uint64_t seed,
                                               const ConnConfig& config) {
  std::vector<SupportFindSketch> out;
  for (const auto& p : conn_layout(n, k, seed, config)) out.emplace_back(p);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Edge helpers

Edge edge_from_index(std::uint64_t n, std::uint64_t index) {
  if (index < 1 || index > pair_count(n))
    throw Error(ErrorCode::CorruptData, "coordinate " + std::to_string(index) + " is not a vertex pair");
  // Row a covers indices (a-1)(2n-a)/2 + 1 .. a(2n-a-1)/2.
  std::uint64_t lo = 1, hi = n - 1;
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi) / 2;
    if (mid * (2 * n - mid - 1) / 2 < index)
      lo = mid + 1;
    else
      hi = mid;
  }
  const std::uint64_t a = lo;
  const std::uint64_t b = index - (a - 1) * (2 * n - a) / 2 + a;
  return Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

std::uint64_t padded_dimension(std::uint64_t n) noexcept {
  return std::bit_ceil(std::max<std::uint64_t>(2, pair_count(n)));
}

std::vector<char> membership(std::size_t n, const VertexSet& side) {
  std::vector<char> in(n + 1, 0);
  for (Vertex v : side)
    if (v >= 1 && v <= n) in[v] = 1;
  return in;
}

std::vector<Edge> crossing_edges(std::size_t n, const std::vector<Edge>& edges, const VertexSet& side) {
  const auto in = membership(n, side);
  std::vector<Edge> out;
  for (const Edge& e : edges)
    if (in[e.u] != in[e.v]) out.push_back(e);
  return out;
}

std::vector<RecoveredEntry> incidence_vector(std::size_t n, Vertex v, const std::vector<Edge>& edges) {
  std::vector<RecoveredEntry> x;
  for (const Edge& e : edges) {
    if (e.u == v) x.push_back({edge_index(n, e.u, e.v), +1});
    if (e.v == v) x.push_back({edge_index(n, e.u, e.v), -1});
  }
  std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return x;
}

// ---------------------------------------------------------------------------
// Layout and stats

unsigned stack_count(std::uint64_t k) noexcept {
  return k <= 1 ? 0u : static_cast<unsigned>(std::bit_width(k - 1));
}

unsigned forest_round_count(std::uint64_t n) noexcept {
  return (n <= 1 ? 0u : static_cast<unsigned>(std::bit_width(n - 1))) + 2;
}

std::size_t stack_budget(unsigned r, std::size_t k) noexcept {
  if (r >= 63) return k;
  return std::min<std::size_t>(std::size_t{1} << r, k);
}

std::vector<SupportFindParams> conn_layout(std::size_t n, std::size_t k, std::uint64_t seed,
                                           const ConnConfig& config) {
  validate_conn(n, k);
  const std::uint64_t m = padded_dimension(n);
  const unsigned rounds = forest_round_count(n);
  const unsigned stacks = stack_count(k);
  std::vector<SupportFindParams> out;
  out.reserve(rounds + stacks);
  std::uint64_t stream = 0;
  for (unsigned b = 0; b < rounds; ++b) {
    out.push_back(SupportFindParams{1, n, m, Delta::inverse_power(n, kForestDeltaExponent), config.c,
                                    config.w, derive_seed(seed, stream++)});
  }
  for (unsigned r = 1; r <= stacks; ++r) {
    out.push_back(SupportFindParams{stack_budget(r, k), n, m,
                                    Delta::inverse_power(n, kStackDeltaExponent), config.c, config.w,
                                    derive_seed(seed, stream++)});
  }
  return out;
}

ConnStats conn_stats(std::size_t n, std::size_t k, const ConnConfig& config) {
  const auto layout = conn_layout(n, k, 0, config);
  const unsigned rounds = forest_round_count(n);
  ConnStats s;
  s.n = n;
  s.k = k;
  s.m = padded_dimension(n);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& p = layout[i];
    StackStats st;
    const bool forest = i < rounds;
    st.name = forest ? "forest[" + std::to_string(i) + "]" : "M_" + std::to_string(i - rounds + 1);
    st.budget = p.k;
    st.t = p.t();
    st.ell = p.ell();
    st.levels = p.levels();
    st.bits = p.serialized_bytes() * 8;
    if (forest) {
      s.forest_bits += st.bits;
      s.forest.push_back(st);
    } else {
      s.stack_bits += st.bits;
      s.sum_t += st.t;
      s.stacks.push_back(st);
    }
  }
  s.total_bits = s.forest_bits + s.stack_bits + ConnSketch::kHeaderBytes * 8;
  const double lg_n = std::log2(static_cast<double>(n));
  const double lg_k = std::log2(static_cast<double>(k));
  s.comparator = std::max(static_cast<double>(k), lg_n * lg_k);
  return s;
}

// ---------------------------------------------------------------------------
// ConnSketch

ConnSketch::ConnSketch(std::size_t n, std::size_t k, std::uint64_t seed, const ConnConfig& config)
    : ConnSketch(n, k, seed, config, build_instances(n, k, seed, config)) {}

ConnSketch::ConnSketch(std::size_t n, std::size_t k, std::uint64_t seed, const ConnConfig& config,
                       std::vector<SupportFindSketch> instances)
    : n_(n),
      k_(k),
      seed_(seed),
      config_(config),
      m_(padded_dimension(n)),
      forest_rounds_(forest_round_count(n)),
      stacks_(stack_count(k)),
      instances_(std::move(instances)) {
  validate_conn(n, k);
  if (instances_.size() != forest_rounds_ + stacks_)
    throw Error(ErrorCode::CorruptData, "instance count does not match (n, k)");
}

const SupportFindSketch& ConnSketch::forest(unsigned b) const {
  if (b >= forest_rounds_) throw Error(ErrorCode::IndexOutOfRange, "forest round out of range");
  return instances_[b];
}

const SupportFindSketch& ConnSketch::stack(unsigned r) const {
  if (r < 1 || r > stacks_) throw Error(ErrorCode::IndexOutOfRange, "stack index out of range");
  return instances_[forest_rounds_ + r - 1];
}

void ConnSketch::apply(Vertex u, Vertex v, int sign) {
  if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw Error(ErrorCode::IndexOutOfRange, "vertex outside [1, " + std::to_string(n_) + "]");
  const Edge e = Edge::make(u, v);
  const std::uint64_t coord = edge_index(n_, e.u, e.v);
  for (auto& inst : instances_) {
    inst.update(e.u, coord, sign);
    inst.update(e.v, coord, -sign);
  }
}

void ConnSketch::merge(const ConnSketch& other) {
  if (other.n_ != n_ || other.k_ != k_ || other.seed_ != seed_ || !(other.config_ == config_))
    throw Error(ErrorCode::ShapeMismatch, "merging sketches with different public parameters");
  for (std::size_t i = 0; i < instances_.size(); ++i) instances_[i].merge(other.instances_[i]);
}

std::vector<Edge> ConnSketch::spanning_forest() const {
  UnionFind uf(n_);
  std::vector<Edge> forest;
  for (unsigned b = 0; b < forest_rounds_; ++b) {
    // Components are fixed before any query of this round is issued.
    std::vector<VertexSet> components;
    std::vector<std::size_t> slot(n_ + 1, SIZE_MAX);
    for (Vertex v = 1; v <= n_; ++v) {
      const std::size_t root = uf.find(v);
      if (slot[root] == SIZE_MAX) {
        slot[root] = components.size();
        components.emplace_back();
      }
      components[slot[root]].push_back(v);
    }
    if (components.size() == 1) break;

    std::vector<CutQuery> found(components.size());
    const SupportFindSketch& inst = instances_[b];
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto answer = inst.query(as_indices(components[c]));
      CutQuery q;
      q.failed = answer.failed;
      for (const auto& e : answer.entries) {
        if (e.index > pair_count(n_)) {
          q.failed = true;
          break;
        }
        q.edges.push_back(edge_from_index(n_, e.index));
      }
      found[c] = std::move(q);
    }

    bool progressed = false;
    for (const auto& q : found) {
      if (q.failed || q.edges.empty()) continue;
      const Edge e = q.edges.front();
      if (uf.unite(e.u, e.v)) {
        forest.push_back(e);
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

void ConnSketch::check_side(const VertexSet& side) const {
  if (side.empty() || side.size() >= n_)
    throw Error(ErrorCode::InvalidParams, "cut side must be a proper nonempty subset");
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (side[i] < 1 || side[i] > n_) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
    if (i > 0 && side[i] <= side[i - 1])
      throw Error(ErrorCode::InvalidParams, "cut side must be strictly increasing");
  }
}

CutQuery ConnSketch::query_cut_edges(unsigned r, const VertexSet& side, std::size_t budget) const {
  check_side(side);
  const auto answer = stack(r).query(as_indices(side));
  CutQuery q;
  if (answer.failed) {
    q.failed = true;
    return q;
  }
  for (const auto& e : answer.entries) {
    if (q.edges.size() == budget) break;
    if (e.index > pair_count(n_)) {
      // A padding coordinate can only come out of a bad decode.
      return CutQuery{true, {}};
    }
    q.edges.push_back(edge_from_index(n_, e.index));
  }
  return q;
}

Bytes ConnSketch::serialize() const {
  Bytes out;
  std::uint64_t total = kHeaderBytes;
  for (const auto& inst : instances_) total += inst.params().serialized_bytes();
  out.reserve(total);
  ByteWriter w(out);
  w.magic(kMagic);
  w.u8(kVersion);
  w.u64(n_);
  w.u64(k_);
  w.u64(seed_);
  w.u64(double_bits(config_.c));
  w.u64(config_.w);
  w.u32(forest_rounds_);
  w.u32(stacks_);
  for (const auto& inst : instances_) inst.serialize_into(w);
  return out;
}

ConnSketch ConnSketch::deserialize(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  r.expect_magic(kMagic);
  if (r.u8() != kVersion) throw Error(ErrorCode::CorruptData, "unsupported sketch version");
  const std::uint64_t n = r.u64();
  const std::uint64_t k = r.u64();
  const std::uint64_t seed = r.u64();
  ConnConfig config;
  config.c = bits_double(r.u64());
  config.w = r.u64();
  const std::uint32_t rounds = r.u32();
  const std::uint32_t stacks = r.u32();
  if (n < 2 || k < 1 || k >= n || rounds != forest_round_count(n) || stacks != stack_count(k))
    throw Error(ErrorCode::CorruptData, "inconsistent sketch header");
  const auto layout = conn_layout(n, k, seed, config);
  std::vector<SupportFindSketch> instances;
  instances.reserve(layout.size());
  for (const auto& expected : layout) {
    auto inst = SupportFindSketch::deserialize(r);
    if (!(inst.params() == expected))
      throw Error(ErrorCode::CorruptData, "instance parameters disagree with the sketch header");
    instances.push_back(std::move(inst));
  }
  if (r.remaining() != 0) throw Error(ErrorCode::CorruptData, "trailing bytes after sketch");
  return ConnSketch(n, k, seed, config, std::move(instances));
}

}  // namespace cutcert
