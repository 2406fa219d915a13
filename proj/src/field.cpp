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

#include "cutcert/field.hpp"

#include <algorithm>
#include <utility>

#include "cutcert/error.hpp"

namespace cutcert {

FieldElement pow(FieldElement base, std::uint64_t exponent) noexcept {
  FieldElement result = FieldElement::raw(1);
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement inverse(FieldElement a) {
  if (a.is_zero()) throw Error(ErrorCode::InversionOfZero, "inverse of 0 in F_p");
  return pow(a, kModulus - 2);
}

std::vector<FieldElement> inverse_table(std::size_t count) {
  std::vector<FieldElement> inv(count + 1);
  if (count >= 1) inv[1] = FieldElement::raw(1);
  for (std::size_t i = 2; i <= count; ++i) {
    const std::uint64_t q = kModulus / i;
    const std::uint64_t r = kModulus % i;
    inv[i] = -(FieldElement::raw(q) * inv[r]);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// FieldPoly

FieldPoly::FieldPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

FieldPoly FieldPoly::constant(FieldElement c) { return FieldPoly(std::vector<FieldElement>{c}); }

FieldPoly FieldPoly::locator(std::span<const FieldElement> points) {
  std::vector<FieldElement> c(points.size() + 1);
  c[0] = FieldElement::raw(1);
  std::size_t deg = 0;
  for (FieldElement a : points) {
    // c <- c * (1 - a z)
    ++deg;
    for (std::size_t i = deg; i >= 1; --i) c[i] -= a * c[i - 1];
  }
  return FieldPoly(std::move(c));
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement FieldPoly::eval(FieldElement x) const noexcept {
  FieldElement acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldPoly FieldPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<FieldElement> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = FieldElement::from_u64(i) * coeffs_[i];
  return FieldPoly(std::move(d));
}

FieldPoly FieldPoly::reversed() const {
  std::vector<FieldElement> r(coeffs_.rbegin(), coeffs_.rend());
  return FieldPoly(std::move(r));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return FieldPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Berlekamp-Massey

namespace {

// Returns the connection polynomial, or nullopt-like empty vector when the
// linear complexity passes `limit`.
std::vector<FieldElement> run_berlekamp_massey(std::span<const FieldElement> s, std::size_t limit,
                                               bool& exceeded) {
  const std::size_t n = s.size();
  std::vector<FieldElement> c(n + 2), b(n + 2), t;
  c[0] = FieldElement::raw(1);
  b[0] = FieldElement::raw(1);
  std::size_t len = 0;      // current linear complexity
  std::size_t blen = 0;     // degree bound of b
  std::size_t shift = 1;
  FieldElement inv_last = FieldElement::raw(1);
  exceeded = false;

  for (std::size_t i = 0; i < n; ++i) {
    FieldElement d = s[i];
    for (std::size_t j = 1; j <= len; ++j) d += c[j] * s[i - j];
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    const FieldElement coef = d * inv_last;
    if (2 * len <= i) {
      t.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len + 1));
      const std::size_t old_len = len;
      len = i + 1 - len;
      if (len > limit) {
        exceeded = true;
        return {};
      }
      for (std::size_t j = 0; j <= blen && j + shift <= n + 1; ++j) c[j + shift] -= coef * b[j];
      std::fill(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(blen + 1), FieldElement{});
      std::copy(t.begin(), t.end(), b.begin());
      blen = old_len;
      inv_last = inverse(d);
      shift = 1;
    } else {
      for (std::size_t j = 0; j <= blen && j + shift <= n + 1; ++j) c[j + shift] -= coef * b[j];
      ++shift;
    }
  }
  c.resize(len + 1);
  return c;
}

}  // namespace

FieldPoly berlekamp_massey(std::span<const FieldElement> sequence) {
  bool exceeded = false;
  return FieldPoly(run_berlekamp_massey(sequence, sequence.size(), exceeded));
}

FieldPoly berlekamp_massey_bounded(std::span<const FieldElement> sequence,
                                   std::size_t max_degree) {
  bool exceeded = false;
  auto c = run_berlekamp_massey(sequence, max_degree, exceeded);
  if (exceeded) return {};
  return FieldPoly(std::move(c));
}

std::vector<std::size_t> find_roots_among(const FieldPoly& poly,
                                          std::span<const FieldElement> candidates) {
  std::vector<std::size_t> roots;
  if (poly.is_zero()) {
    roots.resize(candidates.size());
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = i;
    return roots;
  }
  if (poly.degree() == 0) return roots;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (poly.eval(candidates[i]).is_zero()) roots.push_back(i);
  return roots;
}

std::vector<FieldElement> solve_transposed_vandermonde(std::span<const FieldElement> points,
                                                       std::span<const FieldElement> rhs) {
  const std::size_t s = points.size();
  if (rhs.size() < s) throw Error(ErrorCode::ShapeMismatch, "rhs shorter than point count");
  if (s == 0) return {};

  const FieldPoly lambda = FieldPoly::locator(points);
  // omega = (sum_{j<s} rhs_j z^j) * lambda mod z^s
  std::vector<FieldElement> omega(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; i + j < s; ++j) omega[i + j] += rhs[i] * lambda.coeff(j);
  const FieldPoly omega_poly(std::move(omega));
  const FieldPoly dlambda = lambda.derivative();

  // Batch inversion of the points.
  std::vector<FieldElement> prefix(s);
  FieldElement acc = FieldElement::raw(1);
  for (std::size_t i = 0; i < s; ++i) {
    prefix[i] = acc;
    acc *= points[i];
  }
  FieldElement inv_acc = inverse(acc);
  std::vector<FieldElement> inv_points(s);
  for (std::size_t i = s; i-- > 0;) {
    inv_points[i] = inv_acc * prefix[i];
    inv_acc *= points[i];
  }

  std::vector<FieldElement> values(s);
  for (std::size_t i = 0; i < s; ++i) {
    const FieldElement x = inv_points[i];
    values[i] = -(points[i] * omega_poly.eval(x) * inverse(dlambda.eval(x)));
  }
  return values;
}

}  // namespace cutcert
