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

// Graph and stream generators shared by the unit tests and the acceptance run.

#ifndef CUTCERT_TESTS_TEST_UTIL_HPP
#define CUTCERT_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cutcert/edge.hpp"
#include "cutcert/io.hpp"

namespace cutcert::testing {

inline std::vector<Edge> complete_graph(std::size_t n, Vertex offset = 0) {
  std::vector<Edge> out;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) out.push_back(Edge{a + offset, b + offset});
  return out;
}

inline std::vector<Edge> cycle_graph(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex a = 1; a <= n; ++a) out.push_back(Edge::make(a, a % n + 1));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Edge> random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (coin(rng)) out.push_back(Edge{a, b});
  return out;
}

/// A strict stream whose final graph is `final_edges`: every final edge is
/// inserted, `noise` extra pairs are inserted and later deleted, and a few
/// final edges are deleted and re-inserted. Order is shuffled subject to
/// strictness.
inline StreamData stream_for(std::size_t n, std::size_t k, const std::vector<Edge>& final_edges,
                             std::size_t noise, std::mt19937_64& rng) {
  StreamData data{{n, k}, {}};
  std::vector<char> present(n * n, 0);
  for (const Edge& e : final_edges) present[(e.u - 1) * n + (e.v - 1)] = 1;
  std::vector<Edge> absent;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (!present[(a - 1) * n + (b - 1)]) absent.push_back(Edge{a, b});
  std::shuffle(absent.begin(), absent.end(), rng);
  absent.resize(std::min(noise, absent.size()));

  // Each pair gets its own small script; scripts are interleaved at random.
  std::vector<std::vector<EdgeUpdate>> scripts;
  std::bernoulli_distribution flap(0.2);
  for (const Edge& e : final_edges) {
    std::vector<EdgeUpdate> s{{+1, e.u, e.v}};
    if (flap(rng)) {
      s.push_back({-1, e.v, e.u});
      s.push_back({+1, e.u, e.v});
    }
    scripts.push_back(std::move(s));
  }
  for (const Edge& e : absent) scripts.push_back({{+1, e.v, e.u}, {-1, e.u, e.v}});

  std::vector<std::size_t> cursor(scripts.size(), 0);
  std::vector<std::size_t> live(scripts.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  while (!live.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
    const std::size_t slot = pick(rng);
    const std::size_t s = live[slot];
    data.updates.push_back(scripts[s][cursor[s]++]);
    if (cursor[s] == scripts[s].size()) {
      live[slot] = live.back();
      live.pop_back();
    }
  }
  return data;
}

/// Two cliques joined by `bridges` edges (1 <= bridges <= min(a, b)).
inline std::vector<Edge> barbell(std::size_t a, std::size_t b, std::size_t bridges) {
  std::vector<Edge> out = complete_graph(a);
  const auto right = complete_graph(b, static_cast<Vertex>(a));
  out.insert(out.end(), right.begin(), right.end());
  for (std::size_t i = 0; i < bridges; ++i)
    out.push_back(Edge{static_cast<Vertex>(i + 1), static_cast<Vertex>(a + 1 + i)});
  std::sort(out.begin(), out.end());
  return out;
}

/// All canonical sides (contain vertex 1, proper) of an n-vertex graph.
inline std::vector<VertexSet> canonical_sides(std::size_t n) {
  std::vector<VertexSet> out;
  for (std::uint32_t x = 0; x + 1 < (std::uint32_t{1} << (n - 1)); ++x) {
    const std::uint32_t mask = (x << 1) | 1u;
    VertexSet side;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) side.push_back(static_cast<Vertex>(v + 1));
    out.push_back(std::move(side));
  }
  return out;
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("cutcert-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace cutcert::testing

#endif  // CUTCERT_TESTS_TEST_UTIL_HPP
