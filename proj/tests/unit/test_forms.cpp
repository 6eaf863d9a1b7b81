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

#include "doctest.h"
#include "morita/forms.hpp"
#include "morita/meataxe.hpp"
#include "test_support.hpp"

using namespace morita;
using namespace morita::testing;

namespace {

std::vector<std::vector<Elem>> all_vectors(const Field& f, std::size_t d) {
  std::vector<std::vector<Elem>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= f.order();
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Elem> v(d);
    std::size_t c = code;
    for (auto& e : v) {
      e = static_cast<Elem>(c % f.order());
      c /= f.order();
    }
    out.push_back(v);
  }
  return out;
}

Elem q_of(const Matrix& a, const std::vector<Elem>& v) {
  const Matrix c = Matrix::column(a.field(), v);
  return (c.transpose() * a * c)(0, 0);
}

// Brute force: number of upper-triangular A over GF(2) with Q(gv) = Q(v)
// for every v and every generator.
std::size_t brute_quadratic_count(const Rep& v) {
  const Field& f = v.field();
  const std::size_t d = v.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) pos.emplace_back(i, j);
  const auto vecs = all_vectors(f, d);
  std::size_t count = 0;
  for (const auto& coeffs : all_vectors(f, pos.size())) {
    Matrix a(f, d, d);
    for (std::size_t k = 0; k < pos.size(); ++k) a(pos[k].first, pos[k].second) = coeffs[k];
    bool ok = true;
    for (const auto& m : v.generator_images())
      for (const auto& x : vecs) {
        const Matrix gx = m * Matrix::column(f, x);
        if (q_of(a, gx.data()) != q_of(a, x)) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

std::size_t pow_size(std::size_t q, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= q;
  return r;
}

}  // namespace

TEST_CASE("invariant_bilinear_space examples") {
  const Field f3 = Field::make(3), f4 = Field::make(2, 2);
  const auto triv = invariant_bilinear_space(trivial_rep(s3(), f3));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0] == Matrix::identity(f3, 1));
  CHECK(classify_form(triv[0]).tag == FormTag::symmetric);

  const auto parts = split_into_simples(permutation_rep(a5(), f3));
  const Rep four = parts[1].module;
  const auto sp = invariant_bilinear_space(four);
  REQUIRE(sp.size() == 1);
  CHECK(is_invariant_form(four, sp[0]));
  CHECK(classify_form(sp[0]).symmetric);
  CHECK(classify_form(sp[0]).nondegenerate);
  // Lemma: dimension equals dim Hom(V, V*).
  CHECK(sp.size() == hom_space(four, dual_rep(four)).size());

  // C3 over GF(4) acting by a primitive cube root of unity: not self-dual.
  const Elem w = f4.generator();
  const Rep omega = Rep::make(cyclic(3), f4, {Matrix(f4, 1, 1, {w})});
  CHECK(invariant_bilinear_space(omega).empty());
  CHECK(self_dual_type(omega, true).type == SelfDualType::not_self_dual);
}

TEST_CASE("generator invariance implies full invariance") {
  for (const auto& v : small_modules())
    for (const auto& x : invariant_bilinear_space(v)) CHECK(is_invariant_form(v, x));
  const Field f3 = Field::make(3);
  for (const auto& x : invariant_bilinear_space(permutation_rep(s4(), f3))) CHECK(is_invariant_form(permutation_rep(s4(), f3), x));
}

TEST_CASE("classify_form examples") {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  auto c = classify_form(Matrix::identity(f3, 3));
  CHECK(c.tag == FormTag::symmetric);
  CHECK(c.nondegenerate);
  c = classify_form(Matrix::from_ints(f3, {{0, 1}, {-1, 0}}));
  CHECK(c.antisymmetric);
  CHECK(c.alternating);
  CHECK_FALSE(c.symmetric);
  CHECK(c.nondegenerate);
  c = classify_form(Matrix::from_ints(f2, {{0, 1}, {1, 0}}));
  CHECK(c.symmetric);
  CHECK(c.alternating);
  CHECK(c.tag == FormTag::alternating);
  c = classify_form(Matrix::from_ints(f3, {{1, 1}, {0, 1}}));
  CHECK(c.tag == FormTag::asymmetric);
  CHECK_FALSE(classify_form(Matrix::from_ints(f3, {{1, 2}, {2, 1}})).nondegenerate);
}

TEST_CASE("self_dual_type") {
  const Field f3 = Field::make(3);
  CHECK(self_dual_type(trivial_rep(a5(), f3), true).type == SelfDualType::symmetric);
  const Rep p = permutation_rep(a5(), f3);
  try {
    self_dual_type(p, true);
    FAIL("reducible module accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimple);
  }
  // The permutation module itself carries two independent invariant forms.
  CHECK(self_dual_type(p, false).type == SelfDualType::not_unique);
  // 2-dim simple of C3 over GF(2): End = GF(4), so the form is not unique.
  const Field f2 = Field::make(2);
  const Rep c3 = Rep::make(cyclic(3), f2, {Matrix::from_ints(f2, {{0, 1}, {1, 1}})});
  CHECK(self_dual_type(c3, true).type == SelfDualType::not_unique);
  // Antisymmetric in odd characteristic is reported as alternating: the
  // natural module of SL2(3) over GF(3).
  const Group g = sl2(3);
  const auto simples = split_into_simples(permutation_rep(g, f3));
  bool saw_two = false;
  for (const auto& sf : simples)
    if (sf.module.dim() == 2) {
      saw_two = true;
      const auto t = self_dual_type(sf.module, true);
      CHECK(t.type == SelfDualType::alternating);
      CHECK(t.form_class.nondegenerate);
    }
  CHECK(saw_two);
}

TEST_CASE("invariant quadratic forms") {
  const Field f2 = Field::make(2);
  const Rep nat = s3_natural_gf2();
  const Matrix q = Matrix::from_ints(f2, {{1, 1}, {0, 1}});
  const auto space = invariant_quadratic_space(nat);
  bool found = false;
  for (const auto& s : space)
    if (s == q) found = true;
  CHECK(found);
  // Oracle: Q = 1 on the three nonzero vectors of GF(2)^2.
  for (const auto& v : all_vectors(f2, 2)) CHECK(q_of(q, v) == ((v[0] || v[1]) ? 1u : 0u));
  CHECK(is_invariant_quadratic(nat, q));
  const auto tsp = invariant_quadratic_space(trivial_rep(s3(), f2));
  REQUIRE(tsp.size() == 1);
  CHECK(tsp[0] == Matrix::identity(f2, 1));
  CHECK_THROWS_AS(invariant_quadratic_space(trivial_rep(s3(), Field::make(3))), Error);
  // Solver agrees with brute force on every small char-2 module.
  for (const auto& v : small_modules()) {
    if (v.field().characteristic() != 2 || v.field().order() != 2) continue;
    const auto sp = invariant_quadratic_space(v);
    CHECK(pow_size(2, sp.size()) == brute_quadratic_count(v));
    for (const auto& a : sp) {
      CHECK(is_invariant_quadratic(v, a));
      CHECK(is_invariant_form(v, polarize(a)));
    }
  }
}

TEST_CASE("polarize and radicals") {
  const Field f2 = Field::make(2), f4 = Field::make(2, 2);
  const Matrix q = Matrix::from_ints(f2, {{1, 1}, {0, 1}});
  CHECK(polarize(q) == Matrix::from_ints(f2, {{0, 1}, {1, 0}}));
  CHECK(polarize(Matrix::identity(f2, 1)) == Matrix(f2, 1, 1));
  const Matrix a = Matrix::from_ints(f2, {{1, 0}, {0, 1}}), b = Matrix::from_ints(f2, {{0, 1}, {0, 1}});
  CHECK(polarize(a + b) == polarize(a) + polarize(b));
  CHECK(is_nondegenerate_quadratic(q));
  CHECK_FALSE(is_nondegenerate_quadratic(Matrix(f2, 1, 1)));
  CHECK(is_nondegenerate_quadratic(Matrix::identity(f2, 1)));
  // rad Q against enumeration for every upper-triangular form on GF(2)^3
  // and a sample over GF(4).
  for (const Field& f : {f2, f4}) {
    const std::size_t d = f.order() == 2 ? 3 : 2;
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) pos.emplace_back(i, j);
    for (const auto& coeffs : all_vectors(f, pos.size())) {
      Matrix u(f, d, d);
      for (std::size_t k = 0; k < pos.size(); ++k) u(pos[k].first, pos[k].second) = coeffs[k];
      const Matrix rad = quadratic_radical(u);
      const Matrix pol = polarize(u);
      SpanBuilder sb(f, d);
      const Matrix rt = rad.transpose();
      for (std::size_t i = 0; i < rt.rows(); ++i) sb.add(rt.row(i));
      for (const auto& v : all_vectors(f, d)) {
        const Matrix c = Matrix::column(f, v);
        const bool in_rad = (pol * c).is_zero() && q_of(u, v) == 0;
        CHECK(in_rad == sb.contains(v));
      }
    }
  }
}

TEST_CASE("quadratic_type") {
  const Field f2 = Field::make(2);
  const auto r = quadratic_type(s3_natural_gf2());
  CHECK(r.verdict == QuadraticVerdict::yes);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == Matrix::from_ints(f2, {{1, 1}, {0, 1}}));
  CHECK(quadratic_type(trivial_rep(s3(), f2)).verdict == QuadraticVerdict::yes);
  const Rep zero = Rep::make_trusted(s3(), f2, 0, std::vector<Matrix>(2, Matrix(f2, 0, 0)));
  CHECK(quadratic_type(zero).verdict == QuadraticVerdict::yes);
  CHECK_THROWS_AS(quadratic_type(trivial_rep(s3(), Field::make(3))), Error);
  // Regular module of C2: the only invariant forms have a radical.
  for (const auto& v : small_modules()) {
    if (v.field().characteristic() != 2) continue;
    const auto res = quadratic_type(v);
    if (res.verdict == QuadraticVerdict::yes) {
      CHECK(is_invariant_quadratic(v, *res.witness));
      CHECK(is_nondegenerate_quadratic(*res.witness));
    }
  }
}

TEST_CASE("alternating forms on simple char-2 modules") {
  const Field f2 = Field::make(2);
  const auto alt = nondegenerate_alternating_form(s3_natural_gf2());
  REQUIRE(alt.has_value());
  CHECK(classify_form(*alt).alternating);
  CHECK_FALSE(nondegenerate_alternating_form(trivial_rep(s3(), f2)).has_value());
}
