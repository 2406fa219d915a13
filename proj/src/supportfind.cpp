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

#include "cutcert/supportfind.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <string>

#include "cutcert/error.hpp"
#include "cutcert/kernels.hpp"

namespace cutcert {

namespace {

constexpr char kMagic[] = "CCSF";
constexpr std::uint8_t kVersion = 1;

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

}  // namespace

long double Delta::log_inverse() const noexcept {
  return static_cast<long double>(exponent) * std::log(static_cast<long double>(base)) -
         std::log(static_cast<long double>(numerator));
}

bool Delta::valid() const noexcept {
  return numerator >= 1 && base >= 2 && exponent >= 1 && log_inverse() > 0;
}

std::size_t support_threshold(std::size_t k, double c, long double log_inverse_delta) {
  const long double raw = std::ceil(static_cast<long double>(c) * log_inverse_delta);
  const auto from_delta = raw <= 0 ? std::size_t{0} : static_cast<std::size_t>(raw);
  return std::max(k, from_delta);
}

unsigned SupportFindParams::levels() const { return static_cast<unsigned>(std::countr_zero(m)); }

void SupportFindParams::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidParams, why); };
  if (k < 1) fail("k must be positive");
  if (n < 1) fail("n must be positive");
  if (m < 2 || !std::has_single_bit(m)) fail("m must be a power of two >= 2");
  if (m >= kModulus) fail("m must be below the field modulus");
  if (!delta.valid()) fail("delta must lie in (0, 1)");
  if (!(c > 0) || !std::isfinite(c)) fail("C must be positive");
  if (w < 1) fail("W must be positive");
}

std::uint64_t SupportFindParams::subsketch_bytes() const {
  return std::uint64_t{levels()} * 2 * ell() * 8;
}

std::uint64_t SupportFindParams::serialized_bytes() const {
  return n * subsketch_bytes() + kHeaderBytes;
}

// ---------------------------------------------------------------------------
// SubSketch

SubSketch::SubSketch(unsigned levels, std::size_t ell)
    : levels_(levels), ell_(ell), words_(std::size_t{levels} * 2 * ell, 0) {}

void SubSketch::add_at(unsigned level, std::uint64_t coord, std::int64_t u) {
  kernels::accumulate_powers(this->level(level), FieldElement::from_u64(coord),
                             FieldElement::from_signed(u));
}

void SubSketch::merge(const SubSketch& other) {
  if (other.levels_ != levels_ || other.ell_ != ell_)
    throw Error(ErrorCode::ShapeMismatch, "merging sub-sketches of different shape");
  for (std::size_t j = 0; j < words_.size(); ++j)
    words_[j] = (FieldElement::raw(words_[j]) + FieldElement::raw(other.words_[j])).value();
}

bool SubSketch::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::uint64_t> SupportAnswer::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.index);
  return out;
}

// ---------------------------------------------------------------------------
// SupportFindSketch

SupportFindSketch::SupportFindSketch(const SupportFindParams& params)
    : params_((params.validate(), params)),
      t_(params.t()),
      ell_(params.ell()),
      hash_(params.seed, t_, params.m),
      subs_(params.n, SubSketch(params.levels(), ell_)) {}

void SupportFindSketch::check_vector(std::size_t i) const {
  if (i < 1 || i > params_.n)
    throw Error(ErrorCode::IndexOutOfRange, "vector index " + std::to_string(i) + " outside [1, " +
                                                std::to_string(params_.n) + "]");
}

void SupportFindSketch::check_coord(std::uint64_t coord) const {
  if (coord < 1 || coord > params_.m)
    throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(coord) +
                                                " outside [1, " + std::to_string(params_.m) + "]");
}

void SupportFindSketch::update(std::size_t i, std::uint64_t coord, std::int64_t u) {
  check_vector(i);
  check_coord(coord);
  subs_[i - 1].add_at(hash_.level_of(coord), coord, u);
}

void SupportFindSketch::update(std::size_t i, std::span<const RecoveredEntry> delta) {
  for (const auto& e : delta) update(i, e.index, e.value);
}

void SupportFindSketch::update_subsketch(SubSketch& sub, std::uint64_t coord, std::int64_t u) const {
  check_coord(coord);
  if (sub.levels() != levels() || sub.ell() != ell_)
    throw Error(ErrorCode::ShapeMismatch, "sub-sketch shape does not match instance");
  sub.add_at(hash_.level_of(coord), coord, u);
}

SupportAnswer SupportFindSketch::query(std::span<const std::size_t> subset) const {
  std::vector<const std::uint64_t*> rows(subset.size());
  std::vector<std::uint64_t> merged(2 * ell_);
  std::map<std::uint64_t, std::int64_t> partial;
  bool any_exact = false;

  for (std::size_t i : subset) check_vector(i);

  for (unsigned j = levels(); j >= 1; --j) {
    for (std::size_t s = 0; s < subset.size(); ++s) rows[s] = subs_[subset[s] - 1].level(j).data();
    kernels::sum_rows(rows, merged);
    RecoveryResult level = decode_syndromes(merged, ell_, params_.m);
    if (!level.is_exact()) continue;
    any_exact = true;
    const auto& found = level.entries();
    if (found.size() >= t_) {
      // Entries are sorted, so the k smallest indices come first.
      return SupportAnswer{false, {found.begin(), found.begin() + static_cast<std::ptrdiff_t>(params_.k)}};
    }
    for (const auto& e : found) partial[e.index] += e.value;
  }
  if (!any_exact) return SupportAnswer::fail();

  SupportAnswer answer;
  for (const auto& [index, value] : partial) {
    if (answer.entries.size() == params_.k) break;
    if (value != 0) answer.entries.push_back(RecoveredEntry{index, value});
  }
  return answer;
}

const SubSketch& SupportFindSketch::subsketch(std::size_t i) const {
  check_vector(i);
  return subs_[i - 1];
}

void SupportFindSketch::add_subsketch(std::size_t i, const SubSketch& other) {
  check_vector(i);
  subs_[i - 1].merge(other);
}

void SupportFindSketch::merge(const SupportFindSketch& other) {
  if (!(other.params_ == params_))
    throw Error(ErrorCode::ShapeMismatch, "merging SupportFind sketches with different parameters");
  for (std::size_t i = 0; i < subs_.size(); ++i) subs_[i].merge(other.subs_[i]);
}

Bytes SupportFindSketch::serialize() const {
  Bytes out;
  out.reserve(params_.serialized_bytes());
  ByteWriter w(out);
  serialize_into(w);
  return out;
}

void SupportFindSketch::serialize_into(ByteWriter& w) const {
  w.magic(kMagic);
  w.u8(kVersion);
  w.u64(params_.k);
  w.u64(params_.n);
  w.u64(params_.m);
  w.u64(params_.delta.numerator);
  w.u64(params_.delta.base);
  w.u32(params_.delta.exponent);
  w.u64(double_bits(params_.c));
  w.u64(t_);
  w.u64(params_.w);
  w.u64(params_.seed);
  for (std::size_t i = 1; i <= params_.n; ++i) write_subsketch(w, i);
}

void SupportFindSketch::write_subsketch(ByteWriter& w, std::size_t i) const {
  w.words(subsketch(i).words());
}

SubSketch SupportFindSketch::read_subsketch(ByteReader& r) const {
  SubSketch sub = make_subsketch();
  r.words(sub.words());
  for (std::uint64_t s : sub.words())
    if (s >= kModulus) throw Error(ErrorCode::CorruptData, "non-canonical syndrome");
  return sub;
}

SupportFindSketch SupportFindSketch::deserialize(ByteReader& r) {
  r.expect_magic(kMagic);
  if (r.u8() != kVersion) throw Error(ErrorCode::CorruptData, "unsupported SupportFind version");
  SupportFindParams p;
  p.k = r.u64();
  p.n = r.u64();
  p.m = r.u64();
  p.delta.numerator = r.u64();
  p.delta.base = r.u64();
  p.delta.exponent = r.u32();
  p.c = bits_double(r.u64());
  const std::uint64_t t = r.u64();
  p.w = r.u64();
  p.seed = r.u64();
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::CorruptData, std::string("bad SupportFind header: ") + e.what());
  }
  if (t != p.t()) throw Error(ErrorCode::CorruptData, "stored t disagrees with parameters");
  if (r.remaining() < p.n * p.subsketch_bytes())
    throw Error(ErrorCode::CorruptData, "truncated SupportFind payload");
  SupportFindSketch sk(p);
  for (std::size_t i = 0; i < p.n; ++i) sk.subs_[i] = sk.read_subsketch(r);
  return sk;
}

}  // namespace cutcert
