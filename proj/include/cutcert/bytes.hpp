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

// Little-endian byte buffers for the binary sketch formats.

#ifndef CUTCERT_BYTES_HPP
#define CUTCERT_BYTES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutcert/error.hpp"

namespace cutcert {

using Bytes = std::vector<std::uint8_t>;

class ByteWriter {
 public:
  explicit ByteWriter(Bytes& out) : out_(out) {}

  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void words(std::span<const std::uint64_t> ws) {
    out_.reserve(out_.size() + ws.size() * 8);
    for (std::uint64_t w : ws) u64(w);
  }
  void magic(std::string_view tag) {
    for (char c : tag) out_.push_back(static_cast<std::uint8_t>(c));
  }

 private:
  Bytes& out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_++]} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{in_[pos_++]} << (8 * i);
    return v;
  }
  void words(std::span<std::uint64_t> out) {
    need(out.size() * 8);
    for (auto& w : out) w = u64();
  }
  void expect_magic(std::string_view tag) {
    need(tag.size());
    for (char c : tag)
      if (in_[pos_++] != static_cast<std::uint8_t>(c))
        throw Error(ErrorCode::CorruptData, "bad magic, expected " + std::string(tag));
  }

  std::size_t remaining() const noexcept { return in_.size() - pos_; }
  std::size_t position() const noexcept { return pos_; }

 private:
  void need(std::size_t count) const {
    if (in_.size() - pos_ < count) throw Error(ErrorCode::CorruptData, "truncated input");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace cutcert

#endif  // CUTCERT_BYTES_HPP
