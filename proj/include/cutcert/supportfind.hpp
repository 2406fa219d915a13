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

// SupportFind(k, n, m, delta): n vectors x_1..x_n in Z^m, each summarised by
// a stack of L = log2(m) level sketches. Level j holds the (W*t)-sparse
// recovery syndromes of x restricted to the coordinates the shared geometric
// hash sends to level j. A query on S sums the sub-sketches of S (the sketch
// is linear) and walks the levels from the sparsest up, returning
// min{k, |supp(x_S)|} support coordinates with probability >= 1 - delta.

#ifndef CUTCERT_SUPPORTFIND_HPP
#define CUTCERT_SUPPORTFIND_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cutcert/bytes.hpp"
#include "cutcert/hashing.hpp"
#include "cutcert/sparse_recovery.hpp"

namespace cutcert {

/// Failure probability numerator / base^exponent. The power form lets
/// delta = n^-10 stay exact for any n.
struct Delta {
  std::uint64_t numerator = 1;
  std::uint64_t base = 10;
  std::uint32_t exponent = 1;

  static Delta ratio(std::uint64_t numerator, std::uint64_t denominator) {
    return Delta{numerator, denominator, 1};
  }
  static Delta inverse_power(std::uint64_t base, std::uint32_t exponent) {
    return Delta{1, base, exponent};
  }

  /// ln(1/delta).
  long double log_inverse() const noexcept;
  bool valid() const noexcept;

  friend bool operator==(const Delta&, const Delta&) = default;
};

inline constexpr double kDefaultTConstant = 4.0;
inline constexpr std::size_t kDefaultSparsityMultiplier = 32;

/// t = max{k, ceil(C * ln(1/delta))}.
std::size_t support_threshold(std::size_t k, double c, long double log_inverse_delta);

struct SupportFindParams {
  std::size_t k = 1;
  std::size_t n = 1;
  std::uint64_t m = 2;  // power of two
  Delta delta = Delta::ratio(1, 10);
  double c = kDefaultTConstant;
  std::size_t w = kDefaultSparsityMultiplier;
  std::uint64_t seed = 0;

  std::size_t t() const { return support_threshold(k, c, delta.log_inverse()); }
  std::size_t ell() const { return w * t(); }
  unsigned levels() const;
  /// Throws InvalidParams.
  void validate() const;

  /// Payload bytes of one sub-sketch: L * 2 * W * t * 8.
  std::uint64_t subsketch_bytes() const;
  /// Serialized header size.
  static constexpr std::uint64_t kHeaderBytes = 4 + 1 + 8 * 3 + 8 + 8 + 4 + 8 + 8 * 3;
  /// Full serialized size: n * subsketch_bytes() + kHeaderBytes.
  std::uint64_t serialized_bytes() const;

  friend bool operator==(const SupportFindParams&, const SupportFindParams&) = default;
};

/// One vector's level stack: levels() rows of 2*ell syndromes, contiguous.
class SubSketch {
 public:
  SubSketch() = default;
  SubSketch(unsigned levels, std::size_t ell);

  unsigned levels() const noexcept { return levels_; }
  std::size_t ell() const noexcept { return ell_; }

  /// Syndromes of level j, 1 <= j <= levels().
  std::span<const std::uint64_t> level(unsigned j) const noexcept {
    return {words_.data() + (j - 1) * 2 * ell_, 2 * ell_};
  }
  std::span<std::uint64_t> level(unsigned j) noexcept {
    return {words_.data() + (j - 1) * 2 * ell_, 2 * ell_};
  }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  void add_at(unsigned level, std::uint64_t coord, std::int64_t u);
  void merge(const SubSketch& other);
  bool is_zero() const noexcept;

  friend bool operator==(const SubSketch&, const SubSketch&) = default;

 private:
  unsigned levels_ = 0;
  std::size_t ell_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Indices(list) | Fail. Entries carry the recovered signed value too.
struct SupportAnswer {
  bool failed = false;
  std::vector<RecoveredEntry> entries;  // increasing index

  static SupportAnswer fail() { return SupportAnswer{true, {}}; }
  std::vector<std::uint64_t> indices() const;
};

class SupportFindSketch {
 public:
  explicit SupportFindSketch(const SupportFindParams& params);

  const SupportFindParams& params() const noexcept { return params_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t ell() const noexcept { return ell_; }
  unsigned levels() const noexcept { return hash_.levels(); }
  const GeometricLevels& level_hash() const noexcept { return hash_; }

  /// x_i[coord] += u. i in [1, n], coord in [1, m].
  void update(std::size_t i, std::uint64_t coord, std::int64_t u);
  /// x_i += delta, one coordinate at a time.
  void update(std::size_t i, std::span<const RecoveredEntry> delta);

  /// S holds 1-based vector indices (duplicates are not allowed).
  SupportAnswer query(std::span<const std::size_t> subset) const;

  const SubSketch& subsketch(std::size_t i) const;
  /// Adds a sub-sketch built elsewhere (same params) into slot i.
  void add_subsketch(std::size_t i, const SubSketch& other);
  /// A zeroed sub-sketch of the right shape, for building a vector's sketch
  /// away from the instance (distributed players).
  SubSketch make_subsketch() const { return SubSketch(levels(), ell_); }
  /// Adds x[coord] += u to a free-standing sub-sketch using this instance's hash.
  void update_subsketch(SubSketch& sub, std::uint64_t coord, std::int64_t u) const;

  void merge(const SupportFindSketch& other);

  Bytes serialize() const;
  void serialize_into(ByteWriter& w) const;
  static SupportFindSketch deserialize(ByteReader& r);

  /// Writes just the sub-sketch payload of vector i.
  void write_subsketch(ByteWriter& w, std::size_t i) const;
  SubSketch read_subsketch(ByteReader& r) const;

  friend bool operator==(const SupportFindSketch& a, const SupportFindSketch& b) {
    return a.params_ == b.params_ && a.subs_ == b.subs_;
  }

 private:
  void check_vector(std::size_t i) const;
  void check_coord(std::uint64_t coord) const;

  SupportFindParams params_;
  std::size_t t_;
  std::size_t ell_;
  GeometricLevels hash_;
  std::vector<SubSketch> subs_;
};

}  // namespace cutcert

#endif  // CUTCERT_SUPPORTFIND_HPP
