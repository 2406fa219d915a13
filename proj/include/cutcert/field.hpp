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

// Arithmetic in F_p for the Mersenne prime p = 2^61 - 1, plus the
// polynomial routines used by syndrome decoding.

#ifndef CUTCERT_FIELD_HPP
#define CUTCERT_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#if !defined(__SIZEOF_INT128__)
#error "cutcert requires unsigned __int128 (GCC/Clang)"
#endif

namespace cutcert {

inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

namespace detail {

constexpr std::uint64_t reduce(unsigned __int128 x) noexcept {
  std::uint64_t lo = static_cast<std::uint64_t>(x) & kModulus;
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t r = lo + hi;  // < 2^62 for x < 2^122
  r = (r & kModulus) + (r >> 61);
  return r >= kModulus ? r - kModulus : r;
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) noexcept {
  return reduce(static_cast<unsigned __int128>(a) * b);
}

constexpr std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = a + b;
  return r >= kModulus ? r - kModulus : r;
}

constexpr std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) noexcept {
  return a >= b ? a - b : a + kModulus - b;
}

}  // namespace detail

/// An element of F_p held in canonical form, 0 <= value() < p.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  /// Reduces an arbitrary 64-bit word.
  static constexpr FieldElement from_u64(std::uint64_t x) noexcept {
    return FieldElement(detail::reduce(x));
  }

  /// Maps a signed integer to its residue; negative values wrap to p - |x|.
  static constexpr FieldElement from_signed(std::int64_t x) noexcept {
    if (x >= 0) return from_u64(static_cast<std::uint64_t>(x));
    std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
    return FieldElement(detail::sub_mod(0, detail::reduce(mag)));
  }

  /// Wraps a word already known to be canonical.
  static constexpr FieldElement raw(std::uint64_t canonical) noexcept {
    return FieldElement(canonical);
  }

  constexpr std::uint64_t value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }

  /// Residues above p/2 read back as negative integers.
  constexpr std::int64_t to_signed() const noexcept {
    if (v_ > kModulus / 2) return -static_cast<std::int64_t>(kModulus - v_);
    return static_cast<std::int64_t>(v_);
  }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) noexcept {
    return FieldElement(detail::add_mod(a.v_, b.v_));
  }
  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) noexcept {
    return FieldElement(detail::sub_mod(a.v_, b.v_));
  }
  friend constexpr FieldElement operator-(FieldElement a) noexcept {
    return FieldElement(detail::sub_mod(0, a.v_));
  }
  friend constexpr FieldElement operator*(FieldElement a, FieldElement b) noexcept {
    return FieldElement(detail::mul_mod(a.v_, b.v_));
  }
  constexpr FieldElement& operator+=(FieldElement b) noexcept { return *this = *this + b; }
  constexpr FieldElement& operator-=(FieldElement b) noexcept { return *this = *this - b; }
  constexpr FieldElement& operator*=(FieldElement b) noexcept { return *this = *this * b; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  constexpr explicit FieldElement(std::uint64_t v) : v_(v) {}
  std::uint64_t v_ = 0;
};

FieldElement pow(FieldElement base, std::uint64_t exponent) noexcept;

/// Multiplicative inverse. Throws Error(InversionOfZero) for zero.
FieldElement inverse(FieldElement a);

/// Inverses of 1..count in O(count) via inv(i) = -(p / i) * inv(p mod i).
/// Requires count < p. Index 0 of the result is unused and left zero.
std::vector<FieldElement> inverse_table(std::size_t count);

/// Dense polynomial, lowest degree first. The zero polynomial has no
/// coefficients; every other value has a nonzero leading coefficient.
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(std::vector<FieldElement> coeffs);

  static FieldPoly constant(FieldElement c);
  /// prod_i (1 - points[i] * z), the error locator for the given points.
  static FieldPoly locator(std::span<const FieldElement> points);

  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  FieldElement coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : FieldElement{};
  }

  FieldElement eval(FieldElement x) const noexcept;
  FieldPoly derivative() const;
  /// Coefficients reversed: z^deg * P(1/z).
  FieldPoly reversed() const;

  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

/// Shortest linear-feedback polynomial Lambda with Lambda(0) = 1 generating
/// the sequence. Returns the constant 1 for an all-zero sequence.
FieldPoly berlekamp_massey(std::span<const FieldElement> sequence);

/// Same, but gives up as soon as the linear complexity exceeds max_degree.
/// Returns an empty polynomial in that case.
FieldPoly berlekamp_massey_bounded(std::span<const FieldElement> sequence,
                                   std::size_t max_degree);

/// Indices i for which poly(candidates[i]) == 0, ascending. Exhaustive scan.
std::vector<std::size_t> find_roots_among(const FieldPoly& poly,
                                          std::span<const FieldElement> candidates);

/// Solves sum_i c_i * points[i]^j = rhs[j] for j = 0..s-1, s = points.size(),
/// with distinct nonzero points. rhs must hold at least s values.
std::vector<FieldElement> solve_transposed_vandermonde(std::span<const FieldElement> points,
                                                       std::span<const FieldElement> rhs);

}  // namespace cutcert

#endif  // CUTCERT_FIELD_HPP
