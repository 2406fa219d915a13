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

#include <cmath>
#include <set>
#include <vector>

#include "cutcert/hashing.hpp"
#include "doctest.h"

using namespace cutcert;

TEST_CASE("a 1-wise family is constant") {
  const PolyHash h(99, 1, 1024);
  const auto first = h(1);
  for (std::uint64_t i = 2; i <= 1024; ++i) CHECK(h(i) == first);
}

TEST_CASE("hash values are reproducible") {
  const PolyHash a(42, 8, 16), b(42, 8, 16);
  std::vector<std::uint64_t> got;
  for (std::uint64_t i = 1; i <= 8; ++i) {
    CHECK(a(i) == b(i));
    CHECK(a(i) == a(i));
    got.push_back(a(i));
  }
  // Frozen from a reference run; a change here breaks saved sketches.
  CHECK(got == std::vector<std::uint64_t>{10, 15, 1, 16, 7, 3, 15, 11});
  const PolyHash wide(42, 8, std::uint64_t{1} << 20);
  CHECK(wide(1) == 358858);
  CHECK(wide(2) == 97359);
  CHECK(derive_seed(1, 0) == 10451216379200822465ULL);
  CHECK(derive_seed(1, 1) == 13757245211066428519ULL);
}

TEST_CASE("hash values stay in [1, m]") {
  const PolyHash h(3, 6, 100);
  for (std::uint64_t i = 1; i <= 5000; ++i) {
    CHECK(h(i) >= 1);
    CHECK(h(i) <= 100);
  }
}

TEST_CASE("different seeds give different functions") {
  const PolyHash a(1, 4, 1 << 20), b(2, 4, 1 << 20);
  int same = 0;
  for (std::uint64_t i = 1; i <= 100; ++i) same += a(i) == b(i);
  CHECK(same < 3);
}

TEST_CASE("hash output is uniform by chi-square") {
  const std::uint64_t m = std::uint64_t{1} << 20;
  const int buckets = 16;
  const int draws = 100000;
  const PolyHash h(2024, 8, m);
  std::vector<int> count(buckets, 0);
  for (std::uint64_t i = 1; i <= draws; ++i) ++count[(h(i) - 1) * buckets / m];
  const double expected = static_cast<double>(draws) / buckets;
  double chi2 = 0;
  for (int c : count) chi2 += (c - expected) * (c - expected) / expected;
  // 15 degrees of freedom: mean 15, sd sqrt(30).
  CHECK(chi2 < 15 + 3 * std::sqrt(30.0));
}

TEST_CASE("level map examples") {
  CHECK(GeometricLevels::level_for_value(1024, 10) == 1);
  CHECK(GeometricLevels::level_for_value(1, 10) == 10);
  // m = 8
  for (std::uint64_t u : {5, 6, 7, 8}) CHECK(GeometricLevels::level_for_value(u, 3) == 1);
  for (std::uint64_t u : {3, 4}) CHECK(GeometricLevels::level_for_value(u, 3) == 2);
  CHECK(GeometricLevels::level_for_value(2, 3) == 3);
  CHECK(GeometricLevels::level_for_value(1, 3) == 3);
}

TEST_CASE("level map matches the floor-log formula") {
  for (unsigned L = 1; L <= 14; ++L) {
    const std::uint64_t m = std::uint64_t{1} << L;
    for (std::uint64_t u = 1; u <= m; ++u) {
      unsigned want = 1;
      while ((m >> want) >= u) ++want;  // floor(log2(m/u)) + 1
      if (want > L) want = L;
      REQUIRE(GeometricLevels::level_for_value(u, L) == want);
    }
  }
}

TEST_CASE("level preimages halve and the last level absorbs the rest") {
  for (unsigned L = 1; L <= 16; ++L) {
    const std::uint64_t m = std::uint64_t{1} << L;
    std::vector<std::uint64_t> count(L + 1, 0);
    for (std::uint64_t u = 1; u <= m; ++u) ++count[GeometricLevels::level_for_value(u, L)];
    for (unsigned j = 1; j < L; ++j) CHECK(count[j] == (m >> j));
    CHECK(count[L] == 2);  // u = 2 and the clamped u = 1
  }
}

TEST_CASE("geometric levels lie in [1, L] and roughly halve") {
  const std::uint64_t m = std::uint64_t{1} << 16;
  const GeometricLevels g(5, 8, m);
  CHECK(g.levels() == 16);
  std::vector<int> count(17, 0);
  for (std::uint64_t i = 1; i <= m; ++i) {
    const unsigned level = g.level_of(i);
    REQUIRE(level >= 1);
    REQUIRE(level <= 16);
    ++count[level];
  }
  for (unsigned j = 1; j <= 6; ++j) {
    const double want = static_cast<double>(m) / std::pow(2.0, j);
    CHECK(std::abs(count[j] - want) < 5 * std::sqrt(want));
  }
}
