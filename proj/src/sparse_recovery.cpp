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

#include "cutcert/sparse_recovery.hpp"

#include <algorithm>
#include <string>

#include "cutcert/error.hpp"
#include "cutcert/kernels.hpp"

namespace cutcert {

namespace {

constexpr char kMagic[] = "CCSR";
constexpr std::uint8_t kVersion = 1;

// Inverse evaluation points 1/i for i = 1..m, cached per thread for the most
// recent m. candidates[i-1] = 1/i.
std::span<const FieldElement> inverse_points(std::uint64_t m) {
  thread_local std::uint64_t cached_m = 0;
  thread_local std::vector<FieldElement> cached;
  if (cached_m != m) {
    auto table = inverse_table(static_cast<std::size_t>(m));
    cached.assign(table.begin() + 1, table.end());
    cached_m = m;
  }
  return cached;
}

}  // namespace

RecoveryResult decode_syndromes(std::span<const std::uint64_t> syndromes, std::size_t ell,
                                std::uint64_t m) {
  if (syndromes.size() != 2 * ell)
    throw Error(ErrorCode::ShapeMismatch, "syndrome count must equal 2*ell");
  if (std::all_of(syndromes.begin(), syndromes.end(), [](std::uint64_t s) { return s == 0; }))
    return RecoveryResult::exact({});

  std::vector<FieldElement> seq(syndromes.size());
  for (std::size_t j = 0; j < seq.size(); ++j) seq[j] = FieldElement::raw(syndromes[j]);

  const FieldPoly locator = berlekamp_massey_bounded(seq, ell);
  if (locator.is_zero() || locator.degree() < 1) return RecoveryResult::not_sparse();
  const auto support_size = static_cast<std::size_t>(locator.degree());
  if (support_size > m) return RecoveryResult::not_sparse();

  const std::vector<std::size_t> roots = find_roots_among(locator, inverse_points(m));
  if (roots.size() != support_size) return RecoveryResult::not_sparse();

  std::vector<FieldElement> points(support_size);
  for (std::size_t i = 0; i < support_size; ++i) points[i] = FieldElement::from_u64(roots[i] + 1);
  const std::vector<FieldElement> values =
      solve_transposed_vandermonde(points, std::span<const FieldElement>(seq).first(support_size));
  if (std::any_of(values.begin(), values.end(), [](FieldElement v) { return v.is_zero(); }))
    return RecoveryResult::not_sparse();

  // Re-encode every syndrome and compare.
  std::vector<FieldElement> term(values);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    FieldElement acc;
    for (std::size_t i = 0; i < support_size; ++i) {
      acc += term[i];
      term[i] *= points[i];
    }
    if (acc != seq[j]) return RecoveryResult::not_sparse();
  }

  std::vector<RecoveredEntry> entries(support_size);
  for (std::size_t i = 0; i < support_size; ++i)
    entries[i] = RecoveredEntry{roots[i] + 1, values[i].to_signed()};
  return RecoveryResult::exact(std::move(entries));
}

SparseSketch::SparseSketch(std::size_t ell, std::uint64_t m) : ell_(ell), m_(m) {
  if (ell == 0) throw Error(ErrorCode::InvalidParams, "ell must be positive");
  if (m == 0 || m >= kModulus) throw Error(ErrorCode::InvalidParams, "dimension out of range");
  syndromes_.assign(2 * ell, 0);
}

void SparseSketch::update(std::uint64_t index, std::int64_t u) {
  if (index < 1 || index > m_)
    throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(index) +
                                                " outside [1, " + std::to_string(m_) + "]");
  kernels::accumulate_powers(syndromes_, FieldElement::from_u64(index),
                             FieldElement::from_signed(u));
}

void SparseSketch::merge(const SparseSketch& other) {
  if (other.ell_ != ell_ || other.m_ != m_)
    throw Error(ErrorCode::ShapeMismatch, "merging sparse sketches of different shape");
  for (std::size_t j = 0; j < syndromes_.size(); ++j)
    syndromes_[j] = (FieldElement::raw(syndromes_[j]) + FieldElement::raw(other.syndromes_[j])).value();
}

Bytes SparseSketch::serialize() const {
  Bytes out;
  out.reserve(kHeaderBytes + syndromes_.size() * 8);
  ByteWriter w(out);
  w.magic(kMagic);
  w.u8(kVersion);
  w.u64(ell_);
  w.u64(m_);
  w.words(syndromes_);
  return out;
}

SparseSketch SparseSketch::deserialize(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  r.expect_magic(kMagic);
  if (r.u8() != kVersion) throw Error(ErrorCode::CorruptData, "unsupported sparse sketch version");
  const std::uint64_t ell = r.u64();
  const std::uint64_t m = r.u64();
  if (ell == 0 || r.remaining() != 16 * ell)
    throw Error(ErrorCode::CorruptData, "sparse sketch payload length mismatch");
  SparseSketch sk(static_cast<std::size_t>(ell), m);
  r.words(sk.syndromes_);
  for (std::uint64_t s : sk.syndromes_)
    if (s >= kModulus) throw Error(ErrorCode::CorruptData, "non-canonical syndrome");
  return sk;
}

SparseSketch merge(SparseSketch a, const SparseSketch& b) {
  a.merge(b);
  return a;
}

}  // namespace cutcert
