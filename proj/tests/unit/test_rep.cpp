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

#include "doctest.h"
#include "morita/meataxe.hpp"
#include "morita/rep.hpp"
#include "test_support.hpp"

using namespace morita;
using namespace morita::testing;

namespace {

// Oracle: V is reducible iff some nonzero vector spins to a proper subspace.
bool simple_by_enumeration(const Rep& v) {
  const Field& f = v.field();
  const std::size_t d = v.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= f.order();
  for (std::size_t code = 1; code < total; ++code) {
    Matrix col(f, d, 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      col(i, 0) = static_cast<Elem>(c % f.order());
      c /= f.order();
    }
    if (spin(v, col).cols() < d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rep_make examples") {
  const Field f2 = Field::make(2);
  const Rep t = trivial_rep(a5(), Field::make(3));
  CHECK(t.dim() == 1);
  const Rep nat = s3_natural_gf2();
  // Oracle: the images have orders 2 and 3.
  const Matrix a = nat.generator_images()[0], b = nat.generator_images()[1];
  CHECK((a * a).is_identity());
  CHECK(!b.is_identity());
  CHECK((b * b * b).is_identity());
  nat.validate_exhaustive();
  try {
    Rep::make(s3(), f2, {Matrix::from_ints(f2, {{1, 1}, {1, 1}}), Matrix::identity(f2, 2)});
    FAIL("singular accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularGeneratorImage);
  }
  try {
    // (0 1) -> identity, (0 1 2) -> swap violates (0 1 2)^3 = 1.
    Rep::make(s3(), f2, {Matrix::identity(f2, 2), Matrix::from_ints(f2, {{0, 1}, {1, 0}})});
    FAIL("relation violation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolation);
  }
  CHECK_THROWS_AS(Rep::make(s3(), f2, {Matrix::identity(f2, 2), Matrix::identity(f2, 3)}), Error);
}

TEST_CASE("images respect products exhaustively") {
  const Field f3 = Field::make(3);
  for (const Rep& v : {permutation_rep(a5(), f3), regular_rep(s3(), f3), permutation_rep(s4(), f3)}) {
    const Group& g = v.group();
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); b += 1 + g.order() / 30) CHECK(v.image(a) * v.image(b) == v.image(g.mul(a, b)));
    v.validate_exhaustive();
  }
}

TEST_CASE("permutation rep of A5 over GF(3)") {
  const Field f3 = Field::make(3);
  const Rep p = permutation_rep(a5(), f3);
  CHECK(p.dim() == 5);
  Matrix ones(f3, 5, 1);
  for (std::size_t i = 0; i < 5; ++i) ones(i, 0) = 1;
  for (std::size_t g = 0; g < 60; ++g) CHECK(p.image(g) * ones == ones);
  const auto r = meataxe_simple(p);
  CHECK_FALSE(r.simple);
  CHECK(is_invariant_subspace(p, r.submodule));
  const auto parts = split_into_simples(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].module.dim() == 1);
  CHECK(parts[1].module.dim() == 4);
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[1].multiplicity == 1);
  const Rep four = parts[1].module;
  CHECK(meataxe_simple(four).simple);
  // Self-dual, with a 1-dim endomorphism ring and hom 0 to the trivial module.
  CHECK(is_isomorphic(four, dual_rep(four)).has_value());
  CHECK(hom_space(four, four).size() == 1);
  CHECK(hom_space(trivial_rep(a5(), f3), four).empty());
  CHECK(is_absolutely_irreducible(four));
  // The square of the 4-dim simple has a trivial composition factor.
  bool has_trivial = false;
  for (const auto& sf : split_into_simples(tensor_k(four, four)))
    if (sf.module.dim() == 1 && is_isomorphic(sf.module, trivial_rep(a5(), f3))) has_trivial = true;
  CHECK(has_trivial);
}

TEST_CASE("dual rep") {
  const Field f3 = Field::make(3);
  const Rep t = trivial_rep(s3(), f3);
  CHECK(dual_rep(t).generator_images() == t.generator_images());
  const Rep p = permutation_rep(a5(), f3);
  const Rep pd = dual_rep(p);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const std::size_t g = rng() % 60;
    CHECK(pd.image(g) == p.image(a5().inv(g)).transpose());
  }
  for (const auto& v : small_modules()) CHECK(dual_rep(dual_rep(v)).generator_images() == v.generator_images());
}

TEST_CASE("direct sum and tensor") {
  const Field f3 = Field::make(3);
  const Rep p = permutation_rep(s4(), f3), s = sign_rep(s4(), f3);
  const Rep zero = Rep::make_trusted(s4(), f3, 0, std::vector<Matrix>(2, Matrix(f3, 0, 0)));
  CHECK(direct_sum(p, zero).generator_images() == p.generator_images());
  const Rep t = tensor_k(p, s);
  CHECK(t.dim() == 4);
  for (std::size_t g = 0; g < 24; ++g) CHECK(t.image(g).trace() == f3.mul(p.image(g).trace(), s.image(g).trace()));
  CHECK_THROWS_AS(tensor_k(p, trivial_rep(s3(), f3)), Error);
  CHECK_THROWS_AS(direct_sum(p, trivial_rep(s4(), Field::make(2))), Error);
}

TEST_CASE("hom_space and is_isomorphic") {
  const Field f3 = Field::make(3);
  CHECK(hom_space(trivial_rep(s3(), f3), trivial_rep(s3(), f3)).size() == 1);
  CHECK_FALSE(is_isomorphic(trivial_rep(s3(), f3), sign_rep(s3(), f3)).has_value());
  const Rep p = permutation_rep(s3(), f3);
  const auto id = is_isomorphic(p, p);
  REQUIRE(id.has_value());
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(id->matrix * p.generator_images()[j] == p.generator_images()[j] * id->matrix);
  std::mt19937_64 rng(9);
  const auto mods = small_modules();
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const Rep c = conjugated(mods[i], rng);
    const auto iso = is_isomorphic(mods[i], c);
    REQUIRE(iso.has_value());
    CHECK(is_invertible(iso->matrix));
    for (std::size_t j = i; j < mods.size(); ++j) {
      if (!(mods[i].group() == mods[j].group()) || !(mods[i].field() == mods[j].field())) continue;
      CHECK(hom_space(mods[i], mods[j]).size() == hom_space(dual_rep(mods[j]), dual_rep(mods[i])).size());
      for (const auto& h : hom_space(mods[i], mods[j]))
        for (std::size_t g = 0; g < mods[i].group().order(); ++g)
          CHECK(h * mods[i].image(g) == mods[j].image(g) * h);
    }
  }
}

TEST_CASE("meataxe examples and oracle agreement") {
  CHECK(meataxe_simple(trivial_rep(a5(), Field::make(3))).simple);
  const auto nat = meataxe_simple(s3_natural_gf2());
  REQUIRE(nat.simple);
  CHECK(verify_certificate(s3_natural_gf2(), *nat.certificate));
  CHECK(simple_by_enumeration(s3_natural_gf2()));
  std::mt19937_64 rng(4);
  for (const auto& v : small_modules()) {
    for (int rep = 0; rep < 3; ++rep) {
      const Rep c = conjugated(v, rng);
      const auto r = meataxe_simple(c, rng());
      CHECK(r.simple == simple_by_enumeration(c));
      if (r.simple) {
        CHECK(verify_certificate(c, *r.certificate));
      } else {
        CHECK(r.submodule.cols() > 0);
        CHECK(r.submodule.cols() < c.dim());
        CHECK(is_invariant_subspace(c, r.submodule));
      }
    }
  }
}

TEST_CASE("split_into_simples") {
  const Field f2 = Field::make(2), f4 = Field::make(2, 2);
  const auto c2 = split_into_simples(regular_rep(cyclic(2), f2));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].multiplicity == 2);
  std::mt19937_64 rng(6);
  for (const auto& v : small_modules()) {
    std::size_t total = 0;
    for (const auto& sf : split_into_simples(v)) total += sf.module.dim() * sf.multiplicity;
    CHECK(total == v.dim());
  }
  // C3 over GF(2): a 2-dim simple that splits over GF(4).
  const Rep c3 = Rep::make(cyclic(3), f2, {Matrix::from_ints(f2, {{0, 1}, {1, 1}})});
  CHECK(meataxe_simple(c3).simple);
  CHECK_FALSE(is_absolutely_irreducible(c3));
  const auto ext = split_into_simples(extend_scalars(c3, f4));
  REQUIRE(ext.size() == 2);
  CHECK(ext[0].module.dim() == 1);
  CHECK(ext[1].module.dim() == 1);
}

TEST_CASE("split guard") {
  const Field f2 = Field::make(2);
  const Rep big = direct_sum(regular_rep(a5(), f2), regular_rep(a5(), f2));
  try {
    split_into_simples(big);
    FAIL("guard not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GuardExceeded);
  }
}

TEST_CASE("is_projective") {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  const auto reg = is_projective(regular_rep(s3(), f3));
  CHECK(reg.projective);
  CHECK(higman_trace(regular_rep(s3(), f3), *reg.witness).is_identity());
  // The projection onto the identity coordinate is a witness for kG.
  Matrix e11(f3, 6, 6);
  e11(0, 0) = 1;
  CHECK(higman_trace(regular_rep(s3(), f3), e11).is_identity());
  CHECK_FALSE(is_projective(trivial_rep(cyclic(3), f3)).projective);
  CHECK_FALSE(higman_solve(trivial_rep(cyclic(3), f3)).projective);
  const auto maschke = is_projective(permutation_rep(s3(), Field::make(5)));
  CHECK(maschke.projective);
  for (const Group& g : {s3(), s4(), a4(), a5(), cyclic(6), sl2(3)})
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (g.order() % p) continue;
      const Rep r = regular_rep(g, Field::make(p));
      const auto res = is_projective(r);
      CHECK(res.projective);
      CHECK(higman_trace(r, *res.witness).is_identity());
    }
  // Sylow-based decision agrees with the direct linear system.
  std::vector<Rep> cases = small_modules();
  cases.push_back(regular_rep(s3(), f2));
  cases.push_back(permutation_rep(s4(), f3));
  cases.push_back(permutation_rep(s4(), f2));
  for (const auto& v : cases) {
    const auto fast = is_projective(v);
    const auto slow = higman_solve(v);
    CHECK(fast.projective == slow.projective);
    if (slow.projective) CHECK(higman_trace(v, *slow.witness).is_identity());
  }
}

TEST_CASE("extend_scalars and pullback") {
  const Field f3 = Field::make(3), f9 = Field::make(3, 2), f81 = Field::make(3, 4);
  const Rep p = permutation_rep(s4(), f3);
  const Rep e = extend_scalars(p, f9);
  CHECK(e.dim() == p.dim());
  CHECK(e.field() == f9);
  CHECK(extend_scalars(e, f81).generator_images() == extend_scalars(p, f81).generator_images());
  const Group g = s4();
  const Quotient q = quotient_group(g, o_p_prime(g, 3));
  const Rep back = pullback(permutation_rep(q.group, f3), q.proj);
  back.validate_exhaustive();
  for (auto n : o_p_prime(g, 3).members) CHECK(back.image(n).is_identity());
}
