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

#include <algorithm>
#include <random>
#include <set>

#include "cutcert/error.hpp"
#include "cutcert/field.hpp"
#include "doctest.h"

using namespace cutcert;

namespace {

FieldElement fe(std::uint64_t x) { return FieldElement::from_u64(x); }

std::vector<FieldElement> syndromes_of(const std::vector<std::pair<std::uint64_t, std::int64_t>>& x,
                                       std::size_t count) {
  std::vector<FieldElement> s(count);
  for (const auto& [i, c] : x) {
    FieldElement term = FieldElement::from_signed(c);
    for (std::size_t j = 0; j < count; ++j) {
      s[j] += term;
      term *= fe(i);
    }
  }
  return s;
}

std::vector<FieldElement> inverse_points(std::size_t m) {
  std::vector<FieldElement> out;
  for (std::uint64_t i = 1; i <= m; ++i) out.push_back(inverse(fe(i)));
  return out;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  CHECK((fe(kModulus - 1) + fe(1)).value() == 0);
  CHECK((fe(7) * inverse(fe(7))).value() == 1);
  CHECK((fe(std::uint64_t{1} << 60) * fe(2)).value() == 1);
  CHECK(fe(kModulus).value() == 0);
  CHECK((fe(0) - fe(1)).value() == kModulus - 1);
  CHECK(FieldElement::from_signed(-5).to_signed() == -5);
  CHECK(FieldElement::from_signed(INT64_MIN + 1).value() < kModulus);
}

TEST_CASE("inverting zero throws") {
  try {
    (void)inverse(FieldElement{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InversionOfZero);
  }
}

TEST_CASE("inverse table matches pointwise inverses") {
  const auto table = inverse_table(500);
  for (std::uint64_t i = 1; i < table.size(); ++i) CHECK(table[i] == inverse(fe(i)));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = fe(rng()), b = fe(rng()), c = fe(rng());
    CHECK(a.value() < kModulus);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == FieldElement{});
    if (!a.is_zero()) CHECK(a * inverse(a) == fe(1));
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  FieldElement acc = fe(1);
  for (std::uint64_t e = 0; e < 70; ++e) {
    CHECK(pow(fe(3), e) == acc);
    acc *= fe(3);
  }
  CHECK(pow(fe(2), 61) == fe(1));
}

TEST_CASE("polynomial basics") {
  const FieldPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  const FieldPoly p({fe(1), fe(2), fe(3), fe(0)});
  CHECK(p.degree() == 2);
  CHECK(p.eval(fe(2)) == fe(1 + 4 + 12));
  CHECK(p.derivative() == FieldPoly({fe(2), fe(6)}));
  const std::vector<FieldElement> pts{fe(4), fe(9)};
  const FieldPoly loc = FieldPoly::locator(pts);
  CHECK(loc == FieldPoly({fe(1), -fe(4)}) * FieldPoly({fe(1), -fe(9)}));
  CHECK(loc.eval(inverse(fe(4))).is_zero());
}

TEST_CASE("berlekamp-massey on zero syndromes gives 1") {
  const std::vector<FieldElement> s(8);
  const FieldPoly lambda = berlekamp_massey(s);
  CHECK(lambda.degree() == 0);
  CHECK(lambda.coeff(0) == fe(1));
}

TEST_CASE("berlekamp-massey on a single spike") {
  const std::uint64_t alpha = 6;
  const auto s = syndromes_of({{alpha, 5}}, 6);
  CHECK(berlekamp_massey(s) == FieldPoly({fe(1), -fe(alpha)}));
}

TEST_CASE("berlekamp-massey recovers the locator of a 3-sparse vector") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> support(10);
    for (std::uint64_t i = 0; i < 10; ++i) support[i] = i + 1;
    std::shuffle(support.begin(), support.end(), rng);
    support.resize(3);
    std::vector<std::pair<std::uint64_t, std::int64_t>> x;
    std::vector<FieldElement> pts;
    for (auto i : support) {
      x.push_back({i, static_cast<std::int64_t>(rng() % 7) + 1});
      pts.push_back(fe(i));
    }
    const FieldPoly lambda = berlekamp_massey(syndromes_of(x, 6));
    CHECK(lambda.degree() == 3);
    CHECK(lambda == FieldPoly::locator(pts));
    auto roots = find_roots_among(lambda, inverse_points(10));
    std::vector<std::uint64_t> found;
    for (auto r : roots) found.push_back(r + 1);
    std::sort(support.begin(), support.end());
    CHECK(found == support);
  }
}

TEST_CASE("bounded berlekamp-massey gives up past the bound") {
  const auto s = syndromes_of({{2, 1}, {3, 1}, {5, 1}}, 6);
  CHECK(berlekamp_massey_bounded(s, 3).degree() == 3);
  CHECK(berlekamp_massey_bounded(s, 2).is_zero());
}

TEST_CASE("find_roots_among examples") {
  const auto cands = inverse_points(8);
  CHECK(find_roots_among(FieldPoly::constant(fe(1)), cands).empty());
  const auto roots = find_roots_among(FieldPoly({fe(1), -fe(3)}), cands);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] + 1 == 3);

  const std::vector<FieldElement> planted{fe(1), fe(4), fe(6), fe(8)};
  const auto found = find_roots_among(FieldPoly::locator(planted), cands);
  CHECK(found == std::vector<std::size_t>{0, 3, 5, 7});
}

TEST_CASE("support equals roots of the minimal polynomial for small m and ell") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + rng() % 63;
    const std::size_t ell = 1 + rng() % 8;
    const std::size_t size = rng() % (std::min(ell, m) + 1);
    std::set<std::uint64_t> support;
    while (support.size() < size) support.insert(1 + rng() % m);
    std::vector<std::pair<std::uint64_t, std::int64_t>> x;
    for (auto i : support) {
      const auto v = static_cast<std::int64_t>(rng() % 10);
      x.push_back({i, v < 5 ? v - 5 : v - 4});
    }
    const FieldPoly lambda = berlekamp_massey(syndromes_of(x, 2 * ell));
    CHECK(lambda.degree() == static_cast<int>(x.size()));
    std::vector<std::uint64_t> found;
    for (auto r : find_roots_among(lambda, inverse_points(m))) found.push_back(r + 1);
    std::vector<std::uint64_t> want;
    for (const auto& e : x) want.push_back(e.first);
    CHECK(found == want);
  }
}

TEST_CASE("transposed vandermonde solve recovers the values") {
  const std::vector<FieldElement> pts{fe(2), fe(5), fe(11)};
  const auto s = syndromes_of({{2, 4}, {5, -3}, {11, 9}}, 3);
  const auto vals = solve_transposed_vandermonde(pts, s);
  REQUIRE(vals.size() == 3);
  CHECK(vals[0].to_signed() == 4);
  CHECK(vals[1].to_signed() == -3);
  CHECK(vals[2].to_signed() == 9);
}
