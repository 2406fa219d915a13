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

#ifndef CUTCERT_HASHING_HPP
#define CUTCERT_HASHING_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cutcert/field.hpp"

namespace cutcert {

/// t-wise independent hash [m] -> [m]: a random degree t-1 polynomial over
/// F_p, evaluated at i and reduced mod m. Coefficients are re-derived from
/// (seed, t, m), which is all that gets serialized.
class PolyHash {
 public:
  PolyHash(std::uint64_t seed, std::size_t t, std::uint64_t m);

  /// Value in [1, m] for 1 <= i <= m.
  std::uint64_t operator()(std::uint64_t i) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t independence() const noexcept { return coeffs_.size(); }
  std::uint64_t domain() const noexcept { return m_; }

 private:
  std::uint64_t seed_;
  std::uint64_t m_;
  std::vector<FieldElement> coeffs_;  // lowest degree first
};

/// Geometric level assignment: Pr[level = j] = 2^-j for j < L, with the
/// leftover mass on level L, where m = 2^L. Integer arithmetic only.
class GeometricLevels {
 public:
  /// m must be a power of two, at least 2.
  GeometricLevels(std::uint64_t seed, std::size_t t, std::uint64_t m);

  unsigned levels() const noexcept { return levels_; }
  const PolyHash& inner() const noexcept { return inner_; }

  /// Level in [1, L] for coordinate i.
  unsigned level_of(std::uint64_t i) const noexcept { return level_for_value(inner_(i), levels_); }

  /// floor(log2(2^levels / u)) + 1 clamped to [1, levels], for u in [1, 2^levels].
  static unsigned level_for_value(std::uint64_t u, unsigned levels) noexcept;

 private:
  PolyHash inner_;
  unsigned levels_;
};

/// Seed derivation for independent sub-instances (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace cutcert

#endif  // CUTCERT_HASHING_HPP
