// Copyright 2026 The morita-forms Authors
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

#include <random>
#include <set>

#include "doctest.h"
#include "morita/field.hpp"
#include "morita/poly.hpp"

using namespace morita;

namespace {

// Independent GF(9) = GF(3)[i]/(i^2+1) on pairs, used as an oracle.
struct Gauss3 {
  int a, b;  // a + b x
  Gauss3 operator*(Gauss3 o) const { return {((a * o.a - b * o.b) % 3 + 3) % 3, (a * o.b + b * o.a) % 3}; }
  Gauss3 operator+(Gauss3 o) const { return {(a + o.a) % 3, (b + o.b) % 3}; }
  Elem code() const { return static_cast<Elem>(a + 3 * b); }
};

Gauss3 from_code(Elem c) { return {static_cast<int>(c % 3), static_cast<int>(c / 3)}; }

// All monic polynomials of degree d over GF(p).
std::vector<Poly> monics(const Field& f, int d) {
  std::vector<Poly> out;
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= f.order();
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
    std::size_t r = k;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<Elem>(r % f.order());
      r /= f.order();
    }
    c.back() = 1;
    out.emplace_back(f, c);
  }
  return out;
}

bool irreducible_by_trial(const Poly& g) {
  for (int d = 1; 2 * d <= g.degree(); ++d)
    for (const auto& h : monics(g.field(), d))
      if ((g % h).is_zero()) return false;
  return g.degree() >= 1;
}

}  // namespace

TEST_CASE("fq_make picks the smallest monic irreducible") {
  CHECK(Field::make(3).modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2) == Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1}));
  // Oracle: first monic quadratic over GF(3), in the stated order, without a root.
  const Field f3 = Field::make(3);
  for (const auto& g : monics(f3, 2)) {
    if (g.eval(0) && g.eval(1) && g.eval(2)) {
      CHECK(g.coeffs() == Field::make(3, 2).modulus());
      break;
    }
  }
}

TEST_CASE("fq_make errors") {
  CHECK_THROWS_AS(Field::make(4), Error);
  try {
    Field::make(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  try {
    Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
  try {
    Field::make(3, 2, std::vector<std::uint32_t>{1, 1});
    FAIL("wrong degree accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("fq_arith examples") {
  const Field f3 = Field::make(3);
  CHECK(f3.add(1, 2) == 0);
  const Field f9 = Field::make(3, 2);
  const Elem x = f9.generator();
  CHECK(f9.mul(x, x) == 2);
  CHECK(f9.inv(x) == f9.from_coeffs(std::vector<std::uint32_t>{0, 2}));
  CHECK(f9.format(f9.inv(x)) == "2x");
  CHECK_THROWS_AS(f9.inv(0), Error);
  FieldElement a(f9, x), b(f3, 1);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a / FieldElement(f9, 0), Error);
}

TEST_CASE("GF(9) arithmetic matches the pair oracle exhaustively") {
  const Field f9 = Field::make(3, 2);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) {
      CHECK(f9.mul(a, b) == (from_code(a) * from_code(b)).code());
      CHECK(f9.add(a, b) == (from_code(a) + from_code(b)).code());
    }
}

TEST_CASE("field axioms on random triples") {
  for (auto [p, n] : {std::pair{3u, 2u}, {2u, 3u}, {5u, 2u}, {2u, 8u}, {7u, 1u}}) {
    const Field f = Field::make(p, n);
    std::mt19937 rng(p * 100 + n);
    for (int t = 0; t < 300; ++t) {
      const Elem a = rng() % f.order(), b = rng() % f.order(), c = rng() % f.order();
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
    }
  }
}

TEST_CASE("inverses and Frobenius exhaustively for q <= 81") {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 4u}, {2u, 6u}}) {
    const Field f = Field::make(p, n);
    std::size_t fixed = 0;
    for (Elem a = 0; a < f.order(); ++a) {
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      if (f.frobenius(a) == a) ++fixed;
      CHECK(f.pth_root(f.frobenius(a)) == a);
      for (Elem b = 0; b < f.order(); b += 7) {
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      }
    }
    CHECK(fixed == p);
  }
}

TEST_CASE("literal round trip and element parsing") {
  const Field f9 = Field::make(3, 2);
  CHECK(f9.literal() == "gf(3^2; modulus=1,0,1)");
  CHECK(Field::parse(f9.literal()) == f9);
  CHECK(Field::parse("gf(3)") == Field::make(3));
  CHECK(Field::parse("gf(2^2)") == Field::make(2, 2));
  for (Elem a = 0; a < 9; ++a) CHECK(f9.parse_element(f9.format(a)) == a);
  CHECK_THROWS_AS(Field::parse("gf(3"), Error);
}

TEST_CASE("poly_factor examples") {
  const Field f3 = Field::make(3);
  const Poly x2m2(f3, {f3.from_int(-2), 0, 1});
  auto fa = factor(x2m2);
  REQUIRE(fa.factors.size() == 1);
  CHECK(fa.factors[0].second == 1);
  CHECK(is_irreducible(x2m2));

  const Poly x2m1(f3, {2, 0, 1});
  fa = factor(x2m1);
  REQUIRE(fa.factors.size() == 2);
  CHECK(fa.factors[0].first == Poly(f3, {1, 1}));
  CHECK(fa.factors[1].first == Poly(f3, {2, 1}));

  const Poly x3mx(f3, {0, 2, 0, 1});
  CHECK(factor(x3mx).factors.size() == 3);
  CHECK(roots(x3mx) == std::vector<Elem>{0, 1, 2});
  CHECK_THROWS_AS(factor(Poly(f3)), Error);
}

TEST_CASE("poly_factor re-multiplies exhaustively for degree <= 4 over GF(3)") {
  const Field f3 = Field::make(3);
  for (int d = 1; d <= 4; ++d)
    for (const auto& g : monics(f3, d))
      for (Elem unit : {1u, 2u}) {
        const Poly h = g.scaled(unit);
        const auto fa = factor(h);
        CHECK(fa.product() == h);
        for (const auto& [fac, m] : fa.factors) CHECK(irreducible_by_trial(fac));
      }
}

TEST_CASE("factoring over GF(4) and with repeated roots") {
  const Field f4 = Field::make(2, 2);
  for (int d = 1; d <= 3; ++d)
    for (const auto& g : monics(f4, d)) {
      const auto fa = factor(g);
      CHECK(fa.product() == g);
      for (const auto& [fac, m] : fa.factors) CHECK(irreducible_by_trial(fac));
    }
  const Field f2 = Field::make(2);
  // (T+1)^4 (T^2+T+1)^2 over GF(2): needs p-th roots in the squarefree step.
  Poly a(f2, {1, 1}), b(f2, {1, 1, 1});
  Poly g = a * a * a * a * b * b;
  const auto fa = factor(g);
  REQUIRE(fa.factors.size() == 2);
  CHECK(fa.factors[0] == std::pair{a, 4});
  CHECK(fa.factors[1] == std::pair{b, 2});
}

TEST_CASE("fq_embed is a ring homomorphism") {
  const Field f3 = Field::make(3), f9 = Field::make(3, 2), f81 = Field::make(3, 4);
  CHECK(embed(f3, 2, f9) == 2);
  CHECK(embed(f3, 0, f9) == 0);
  const Elem ix = embed(f9, f9.generator(), f81);
  CHECK(f81.add(f81.mul(ix, ix), 1) == 0);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) {
      CHECK(embed(f9, f9.add(a, b), f81) == f81.add(embed(f9, a, f81), embed(f9, b, f81)));
      CHECK(embed(f9, f9.mul(a, b), f81) == f81.mul(embed(f9, a, f81), embed(f9, b, f81)));
    }
  CHECK(embed(f9, 1, f81) == 1);
  // Tower consistency.
  for (Elem a = 0; a < 3; ++a) CHECK(embed(f9, embed(f3, a, f9), f81) == embed(f3, a, f81));
  try {
    embed(f9, 1, Field::make(3, 3));
    FAIL("no embedding exists");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubfield);
  }
}
