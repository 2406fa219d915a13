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

// Deterministic l-sparse recovery. A vector x in Z^m is summarised by the
// 2l power sums s_j = sum_i x_i * i^j (j = 0..2l-1) over F_p, i.e. by A x for
// the transposed Vandermonde matrix on the points 1..m. Any x with at most l
// nonzeros is recovered exactly by syndrome decoding.

#ifndef CUTCERT_SPARSE_RECOVERY_HPP
#define CUTCERT_SPARSE_RECOVERY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cutcert/bytes.hpp"
#include "cutcert/field.hpp"

namespace cutcert {

struct RecoveredEntry {
  std::uint64_t index;  // 1-based coordinate
  std::int64_t value;   // nonzero

  friend bool operator==(const RecoveredEntry&, const RecoveredEntry&) = default;
};

/// Outcome of a decode: the exact sparse vector, or NotSparse.
class RecoveryResult {
 public:
  static RecoveryResult exact(std::vector<RecoveredEntry> entries) {
    return RecoveryResult(true, std::move(entries));
  }
  static RecoveryResult not_sparse() { return RecoveryResult(false, {}); }

  bool is_exact() const noexcept { return exact_; }
  /// Strictly increasing indices; empty unless is_exact().
  const std::vector<RecoveredEntry>& entries() const noexcept { return entries_; }

  friend bool operator==(const RecoveryResult&, const RecoveryResult&) = default;

 private:
  RecoveryResult(bool exact, std::vector<RecoveredEntry> entries)
      : exact_(exact), entries_(std::move(entries)) {}
  bool exact_;
  std::vector<RecoveredEntry> entries_;
};

/// Decodes a syndrome vector of length 2*ell over dimension m. Pipeline:
/// Berlekamp-Massey, root scan over the m inverse points, transposed
/// Vandermonde solve, then re-encoding of all 2*ell syndromes. Anything that
/// does not survive the re-encode comes back as NotSparse.
RecoveryResult decode_syndromes(std::span<const std::uint64_t> syndromes, std::size_t ell,
                                std::uint64_t m);

class SparseSketch {
 public:
  static constexpr std::size_t kHeaderBytes = 4 + 1 + 8 + 8;

  /// Throws InvalidParams unless ell >= 1 and 1 <= m < p.
  SparseSketch(std::size_t ell, std::uint64_t m);

  std::size_t ell() const noexcept { return ell_; }
  std::uint64_t dimension() const noexcept { return m_; }
  std::span<const std::uint64_t> syndromes() const noexcept { return syndromes_; }

  /// x_index += u. index is 1-based; |u| < p/2.
  void update(std::uint64_t index, std::int64_t u);

  /// Adds other's syndromes. Throws ShapeMismatch on differing (ell, m).
  void merge(const SparseSketch& other);

  RecoveryResult decode() const { return decode_syndromes(syndromes_, ell_, m_); }

  Bytes serialize() const;
  static SparseSketch deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const SparseSketch&, const SparseSketch&) = default;

 private:
  std::size_t ell_;
  std::uint64_t m_;
  std::vector<std::uint64_t> syndromes_;
};

/// Functional form of SparseSketch::merge.
SparseSketch merge(SparseSketch a, const SparseSketch& b);

}  // namespace cutcert

#endif  // CUTCERT_SPARSE_RECOVERY_HPP
