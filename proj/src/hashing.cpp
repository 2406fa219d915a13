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

#include "cutcert/hashing.hpp"

#include <bit>
#include <random>

#include "cutcert/error.hpp"

namespace cutcert {

PolyHash::PolyHash(std::uint64_t seed, std::size_t t, std::uint64_t m) : seed_(seed), m_(m) {
  if (t == 0) throw Error(ErrorCode::InvalidParams, "hash independence must be positive");
  if (m == 0) throw Error(ErrorCode::InvalidParams, "hash domain must be nonempty");
  std::mt19937_64 rng(seed);
  coeffs_.reserve(t);
  while (coeffs_.size() < t) {
    const std::uint64_t draw = rng() & kModulus;  // 61 bits, reject the single value p
    if (draw != kModulus) coeffs_.push_back(FieldElement::raw(draw));
  }
}

std::uint64_t PolyHash::operator()(std::uint64_t i) const noexcept {
  const FieldElement x = FieldElement::from_u64(i);
  FieldElement acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc.value() % m_ + 1;
}

GeometricLevels::GeometricLevels(std::uint64_t seed, std::size_t t, std::uint64_t m)
    : inner_(seed, t, m), levels_(0) {
  if (m < 2 || !std::has_single_bit(m))
    throw Error(ErrorCode::InvalidParams, "level hash domain must be a power of two >= 2");
  levels_ = static_cast<unsigned>(std::countr_zero(m));
}

unsigned GeometricLevels::level_for_value(std::uint64_t u, unsigned levels) noexcept {
  // u in [2^(b-1), 2^b): m/u lies in (2^(L-b), 2^(L-b+1)], hitting the upper
  // end only when u is a power of two.
  const auto bits = static_cast<unsigned>(std::bit_width(u));
  unsigned level = levels + 1 - bits + (std::has_single_bit(u) ? 1u : 0u);
  if (level < 1) level = 1;
  if (level > levels) level = levels;
  return level;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cutcert
