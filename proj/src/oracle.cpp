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

#include "cutcert/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cutcert/error.hpp"
#include "cutcert/kernels.hpp"

namespace cutcert {

namespace {

VertexSet component_of_one(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  VertexSet comp;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

VertexSet complement(std::size_t n, const VertexSet& side) {
  const auto in = membership(n, side);
  VertexSet out;
  for (std::size_t v = 1; v <= n; ++v)
    if (!in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool proper_side(std::size_t n, const VertexSet& side) {
  if (side.empty() || side.size() >= n) return false;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (side[i] < 1 || side[i] > n) return false;
    if (i > 0 && side[i] <= side[i - 1]) return false;
  }
  return true;
}

std::vector<Edge> normalized(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExactGraph

ExactGraph::ExactGraph(std::size_t n, bool strict) : n_(n), strict_(strict), mult_(n * n, 0) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "graph needs at least one vertex");
}

std::size_t ExactGraph::slot(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw Error(ErrorCode::IndexOutOfRange, "vertex outside [1, " + std::to_string(n_) + "]");
  if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
  const Edge e = Edge::make(u, v);
  return (e.u - 1) * n_ + (e.v - 1);
}

void ExactGraph::apply(Vertex u, Vertex v, int sign) {
  const std::size_t s = slot(u, v);
  const std::int64_t next = mult_[s] + sign;
  if (strict_ && (next < 0 || next > 1)) {
    throw Error(ErrorCode::StrictViolation,
                std::string(sign > 0 ? "inserting present" : "deleting absent") + " edge (" +
                    std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  mult_[s] = next;
}

std::int64_t ExactGraph::multiplicity(Vertex u, Vertex v) const { return mult_[slot(u, v)]; }

std::vector<Edge> ExactGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 1; a <= n_; ++a)
    for (std::size_t b = a + 1; b <= n_; ++b)
      if (mult_[(a - 1) * n_ + (b - 1)] > 0) out.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return out;
}

// ---------------------------------------------------------------------------
// Min cut

MinCut exact_min_cut(std::size_t n, const std::vector<Edge>& edges) {
  if (n < 2) return MinCut{0, {1}};
  VertexSet comp = component_of_one(n, edges);
  if (comp.size() < n) return MinCut{0, std::move(comp)};

  std::vector<std::uint64_t> w(n * n, 0);
  for (const Edge& e : edges) {
    w[(e.u - 1) * n + (e.v - 1)] += 1;
    w[(e.v - 1) * n + (e.u - 1)] += 1;
  }
  std::vector<VertexSet> groups(n);
  for (std::size_t v = 0; v < n; ++v) groups[v] = {static_cast<Vertex>(v + 1)};
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  VertexSet best_side;
  std::vector<std::uint64_t> key(n);
  std::vector<char> added(n);
  while (active.size() > 1) {
    std::fill(added.begin(), added.end(), 0);
    std::fill(key.begin(), key.end(), 0);
    std::size_t prev = active[0], last = active[0];
    for (std::size_t step = 0; step < active.size(); ++step) {
      std::size_t pick = SIZE_MAX;
      for (std::size_t v : active)
        if (!added[v] && (pick == SIZE_MAX || key[v] > key[pick])) pick = v;
      if (pick == SIZE_MAX) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (std::size_t v : active)
        if (!added[v]) key[v] += w[pick * n + v];
    }
    if (key[last] < best) {
      best = key[last];
      best_side = groups[last];
    }
    // Merge last into prev.
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    for (std::size_t v : active) {
      w[prev * n + v] += w[last * n + v];
      w[v * n + prev] = w[prev * n + v];
    }
    w[prev * n + prev] = 0;
    active.erase(std::find(active.begin(), active.end(), last));
  }
  std::sort(best_side.begin(), best_side.end());
  if (best_side.front() != 1) best_side = complement(n, best_side);
  return MinCut{best, std::move(best_side)};
}

MinCut exhaustive_min_cut(std::size_t n, const std::vector<Edge>& edges) {
  if (n > kMaxExhaustiveVertices) throw Error(ErrorCode::InvalidParams, "exhaustive min cut needs n <= 22");
  if (n < 2) return MinCut{0, {1}};
  std::vector<std::uint32_t> adjacency(n, 0);
  std::vector<Edge> simple = normalized(edges);
  for (const Edge& e : simple) {
    adjacency[e.u - 1] |= 1u << (e.v - 1);
    adjacency[e.v - 1] |= 1u << (e.u - 1);
  }
  MinCut best{std::numeric_limits<std::uint64_t>::max(), {}};
  const std::uint32_t total = (std::uint32_t{1} << (n - 1)) - 1;
  for (std::uint32_t x = 0; x < total; ++x) {
    const std::uint32_t mask = (x << 1) | 1u;
    const std::uint64_t size = kernels::cut_size(adjacency, mask);
    VertexSet side;
    if (size > best.value) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) side.push_back(static_cast<Vertex>(v + 1));
    if (size < best.value || side < best.side) best = MinCut{size, std::move(side)};
  }
  return best;
}

bool is_k_edge_connected(std::size_t n, const std::vector<Edge>& edges, std::size_t k) {
  if (k == 0) return true;
  if (n < 2) return false;
  return exact_min_cut(n, normalized(edges)).value >= k;
}

// ---------------------------------------------------------------------------
// Certificate validation

Verdict validate_certificate(const ExactGraph& graph, std::size_t k, const Certificate& cert) {
  const std::size_t n = graph.n();
  if (cert.n != n) return Verdict::invalid("vertex count mismatch");
  const std::vector<Edge> g_edges = graph.edges();
  const bool g_connected = is_k_edge_connected(n, g_edges, k);

  switch (cert.kind) {
    case CertificateKind::Positive: {
      if (!g_connected) return Verdict::invalid("wrong branch: graph is not k-edge-connected");
      for (const Edge& e : cert.edges) {
        if (e.u < 1 || e.v > n || e.u >= e.v) return Verdict::invalid("malformed edge in H");
        if (!graph.has_edge(e.u, e.v)) return Verdict::invalid("H is not a subgraph of G");
      }
      if (n >= 2 && component_of_one(n, cert.edges).size() != n)
        return Verdict::invalid("H does not span V");
      if (!is_k_edge_connected(n, cert.edges, k)) return Verdict::invalid("not k-connected: H");
      return Verdict::ok();
    }
    case CertificateKind::NegativeCut: {
      if (g_connected) return Verdict::invalid("wrong branch: graph is k-edge-connected");
      if (!proper_side(n, cert.side)) return Verdict::invalid("cut side is not a proper subset");
      const auto exact = normalized(crossing_edges(n, g_edges, cert.side));
      if (normalized(cert.edges) != exact || cert.edges.size() != exact.size())
        return Verdict::invalid("E_S differs from the exact crossing set");
      if (exact.size() >= k) return Verdict::invalid("cut size is not below k");
      return Verdict::ok();
    }
    case CertificateKind::NegativeDisconnected: {
      if (g_connected) return Verdict::invalid("wrong branch: graph is k-edge-connected");
      if (!proper_side(n, cert.side)) return Verdict::invalid("component is not a proper subset");
      if (!crossing_edges(n, g_edges, cert.side).empty())
        return Verdict::invalid("component has crossing edges");
      return Verdict::ok();
    }
  }
  return Verdict::invalid("unknown certificate kind");
}

std::set<std::uint64_t> exact_support(const std::vector<std::map<std::uint64_t, std::int64_t>>& vectors,
                                      const std::vector<std::size_t>& subset) {
  std::map<std::uint64_t, std::int64_t> sum;
  for (std::size_t i : subset)
    for (const auto& [index, value] : vectors.at(i - 1)) sum[index] += value;
  std::set<std::uint64_t> out;
  for (const auto& [index, value] : sum)
    if (value != 0) out.insert(index);
  return out;
}

std::set<std::uint64_t> exact_support(std::size_t n, const std::vector<Edge>& edges, const VertexSet& side) {
  std::set<std::uint64_t> out;
  for (const Edge& e : crossing_edges(n, edges, side)) out.insert(edge_index(n, e.u, e.v));
  return out;
}

}  // namespace cutcert
