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

#include "cutcert/certify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "cutcert/error.hpp"
#include "cutcert/hashing.hpp"
#include "cutcert/kernels.hpp"

namespace cutcert {

namespace {

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

std::uint64_t cut_budget(std::size_t n) {
  const std::uint64_t nn = n;
  return 16 * nn * nn * nn * nn;
}

void check_budget(std::size_t found, std::size_t n) {
  if (found > cut_budget(n))
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(found) + " small cuts exceed the 16 n^4 bound for n=" + std::to_string(n));
}

std::vector<Edge> dedup(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<Cut> exhaustive_cuts(std::size_t n, const std::vector<Edge>& edges, std::size_t threshold) {
  if (n > kMaxExhaustiveVertices)
    throw Error(ErrorCode::InvalidParams, "exhaustive cut enumeration supports n <= 22");
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const Edge& e : edges) {
    adjacency[e.u - 1] |= 1u << (e.v - 1);
    adjacency[e.v - 1] |= 1u << (e.u - 1);
  }
  const auto thr = static_cast<std::uint32_t>(std::min<std::size_t>(threshold, UINT32_MAX));
  const auto masks = kernels::small_cuts(adjacency, thr);
  check_budget(masks.size(), n);
  std::vector<Cut> cuts;
  cuts.reserve(masks.size());
  for (std::uint32_t mask : masks) {
    Cut c;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) c.side.push_back(static_cast<Vertex>(v + 1));
    c.size = kernels::cut_size(adjacency, mask);
    cuts.push_back(std::move(c));
  }
  return cuts;
}

// One contraction trial: contract random edges until `base` super-vertices
// remain, then report every bipartition of the super-vertices that is small.
void contraction_trial(std::size_t n, const std::vector<Edge>& edges, std::size_t threshold,
                       std::size_t base, std::mt19937_64& rng, std::set<VertexSet>& found,
                       std::size_t& fresh) {
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Dsu dsu(n);
  std::size_t components = n;
  for (std::size_t i : order) {
    if (components <= base) break;
    if (dsu.unite(edges[i].u, edges[i].v)) --components;
  }
  // Label super-vertices; vertex 1's group gets label 0.
  std::vector<std::size_t> label(n + 1, SIZE_MAX);
  std::vector<std::size_t> root_label(n + 1, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    const std::size_t r = dsu.find(v);
    if (root_label[r] == SIZE_MAX) root_label[r] = count++;
    label[v] = root_label[r];
  }
  if (count < 2 || count > 24) return;
  // Sides always contain label 0; bit i-1 of `choice` adds label i.
  const std::uint64_t choices = std::uint64_t{1} << (count - 1);
  for (std::uint64_t choice = 0; choice + 1 < choices; ++choice) {
    const std::uint64_t side_labels = (choice << 1) | 1u;
    std::size_t size = 0;
    for (const Edge& e : edges)
      if ((side_labels >> label[e.u] & 1u) != (side_labels >> label[e.v] & 1u)) ++size;
    if (size >= threshold) continue;
    VertexSet side;
    for (std::size_t v = 1; v <= n; ++v)
      if (side_labels >> label[v] & 1u) side.push_back(static_cast<Vertex>(v));
    if (found.insert(std::move(side)).second) ++fresh;
  }
}

std::vector<Cut> contraction_cuts(std::size_t n, const std::vector<Edge>& edges, std::size_t threshold,
                                  const CutOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::set<VertexSet> found;
  const std::size_t base = std::max<std::size_t>(2, options.base_vertices);
  std::size_t batch = std::max<std::size_t>(1, options.first_batch);
  std::size_t trials = 0;
  while (trials < options.max_trials) {
    std::size_t fresh = 0;
    for (std::size_t i = 0; i < batch && trials < options.max_trials; ++i, ++trials)
      contraction_trial(n, edges, threshold, base, rng, found, fresh);
    check_budget(found.size(), n);
    // A batch at least as large as everything before it found nothing new.
    if (fresh == 0) break;
    batch *= 2;
  }
  std::vector<Cut> cuts;
  cuts.reserve(found.size());
  for (const auto& side : found) {
    Cut c{side, crossing_edges(n, edges, side).size()};
    cuts.push_back(std::move(c));
  }
  return cuts;
}

}  // namespace

const char* to_string(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::Positive: return "positive";
    case CertificateKind::NegativeCut: return "negative_cut";
    case CertificateKind::NegativeDisconnected: return "negative_disconnected";
  }
  return "unknown";
}

std::size_t certificate_edge_count(const Certificate& cert) noexcept {
  return cert.kind == CertificateKind::NegativeDisconnected ? 0 : cert.edges.size();
}

std::vector<Cut> enumerate_small_cuts(std::size_t n, const std::vector<Edge>& edges,
                                      std::size_t threshold, const CutOptions& options) {
  if (n < 2) return {};
  const auto simple = dedup(edges);
  CutMode mode = options.mode;
  if (mode == CutMode::Auto) mode = n <= kMaxExhaustiveVertices ? CutMode::Exhaustive : CutMode::Contraction;
  std::vector<Cut> cuts = mode == CutMode::Exhaustive ? exhaustive_cuts(n, simple, threshold)
                                                      : contraction_cuts(n, simple, threshold, options);
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.side < b.side; });
  return cuts;
}

Certificate build_certificate(const ConnSketch& sketch, const CertifyOptions& options,
                              CertifyTrace* trace) {
  const std::size_t n = sketch.n();
  const std::size_t k = sketch.k();
  Certificate cert;
  cert.n = n;
  cert.k = k;
  cert.seed = sketch.seed();

  std::vector<Edge> graph = sketch.spanning_forest();
  cert.forest_edges = graph.size();
  if (trace) trace->forest = graph;

  Dsu dsu(n);
  for (const Edge& e : graph) dsu.unite(e.u, e.v);
  const std::size_t root = dsu.find(1);
  VertexSet component;
  for (std::size_t v = 1; v <= n; ++v)
    if (dsu.find(v) == root) component.push_back(static_cast<Vertex>(v));
  if (component.size() < n) {
    cert.kind = CertificateKind::NegativeDisconnected;
    cert.side = std::move(component);
    return cert;
  }

  for (unsigned r = 1; r <= sketch.stacks(); ++r) {
    const std::size_t threshold = stack_budget(r, k);
    CutOptions cut_options = options.cuts;
    cut_options.seed = derive_seed(options.cuts.seed ^ sketch.seed(), r);
    // S_r is materialised in full before M_r sees any query.
    const std::vector<Cut> cuts = enumerate_small_cuts(n, graph, threshold, cut_options);
    if (trace) trace->round_cuts.push_back(cuts);

    std::vector<CutQuery> answers(cuts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cuts.size(); ++i)
      answers[i] = sketch.query_cut_edges(r, cuts[i].side, threshold);

    std::vector<Edge> added;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      if (answers[i].failed)
        throw Error(ErrorCode::CertifyFailed, "sketch query failed in round " + std::to_string(r));
      if (answers[i].edges.size() < threshold) {
        cert.kind = CertificateKind::NegativeCut;
        cert.side = cuts[i].side;
        cert.edges = dedup(answers[i].edges);
        cert.rounds.push_back(RoundStats{r, threshold, cuts.size(), 0, graph.size()});
        return cert;
      }
      added.insert(added.end(), answers[i].edges.begin(), answers[i].edges.end());
    }
    const std::size_t before = graph.size();
    graph.insert(graph.end(), added.begin(), added.end());
    graph = dedup(std::move(graph));
    cert.rounds.push_back(RoundStats{r, threshold, cuts.size(), graph.size() - before, graph.size()});
    if (trace && options.keep_round_graphs) trace->round_graphs.push_back(graph);
  }

  cert.kind = CertificateKind::Positive;
  cert.edges = std::move(graph);
  return cert;
}

}  // namespace cutcert
