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
#include "morita/meataxe.hpp"
#include "morita/morita.hpp"
#include "test_support.hpp"

using namespace morita;
using namespace morita::testing;

namespace {

Matrix hyperbolic(const Field& f, std::size_t n) {
  Matrix x(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, n + i) = 1;
    x(n + i, i) = f.neg(1);
  }
  return x;
}

Matrix some_iso(const Rep& v, const Rep& w) {
  auto iso = is_isomorphic(v, w);
  REQUIRE(iso.has_value());
  return iso->matrix;
}

Rep inflated_uniserial(const Group& g4) {
  const Group g3 = s3();
  return pullback(s3_uniserial_gf3(), s4_onto_s3(g4, g3));
}

}  // namespace

TEST_CASE("regular bimodule tensor is the identity functor") {
  const Field f = Field::make(3);
  const Group g = s3();
  const BimodForm reg = regular_bimodule(g, f);
  for (const Rep& v : {permutation_rep(g, f), sign_rep(g, f), s3_uniserial_gf3()}) {
    const TensorModule t = tensor_over_kG(reg.bimodule, v);
    CHECK(t.dim() == v.dim());
    CHECK(t.projection * t.section == Matrix::identity(f, t.dim()));
    CHECK((t.projection * t.relations).is_zero());
    CHECK(is_isomorphic(t.h_module, v).has_value());
  }
}

TEST_CASE("tensor dims for the e k G bimodules") {
  const Field f3 = Field::make(3), f2 = Field::make(2);
  const EBimodule e4 = e_bimodule(s4(), 3, f3);
  CHECK(tensor_over_kG(e4.bimodule, trivial_rep(s4(), f3)).dim() == 1);
  const EBimodule e3 = e_bimodule(s3(), 2, f2);
  CHECK(tensor_over_kG(e3.bimodule, regular_rep(s3(), f2)).dim() == 2);
  // Modules outside the principal block are killed.
  const Rep natural3 = quotient_rep(permutation_rep(s4(), f3), Matrix::from_ints(f3, {{1}, {1}, {1}, {1}}));
  CHECK(tensor_over_kG(e4.bimodule, natural3).dim() == 0);
}

TEST_CASE("generator relations span the full-group relations") {
  const Field f3 = Field::make(3), f2 = Field::make(2);
  const EBimodule e4 = e_bimodule(s4(), 3, f3);
  const EBimodule e3 = e_bimodule(s3(), 2, f2);
  const BimodForm reg = regular_bimodule(s3(), f3);
  CHECK(tensor_over_kG(e4.bimodule, inflated_uniserial(s4())).relations.cols() ==
        full_group_relation_rank(e4.bimodule, inflated_uniserial(s4())));
  CHECK(tensor_over_kG(e3.bimodule, regular_rep(s3(), f2)).relations.cols() ==
        full_group_relation_rank(e3.bimodule, regular_rep(s3(), f2)));
  CHECK(tensor_over_kG(reg.bimodule, permutation_rep(s3(), f3)).relations.cols() ==
        full_group_relation_rank(reg.bimodule, permutation_rep(s3(), f3)));
}

TEST_CASE("transport through the regular bimodule returns B") {
  const Field f = Field::make(3);
  const Group g = s3();
  const BimodForm reg = regular_bimodule(g, f);
  const Rep v = permutation_rep(g, f);
  const Matrix B = Matrix::identity(f, 3);
  const TensorModule t = tensor_over_kG(reg.bimodule, v);
  const TransportReport r = transport_form(t, reg.gram, B);
  CHECK(r.passed());
  // v -> 1 (x) v, with the identity at index 0.
  Matrix unit(f, g.order(), 1);
  unit(0, 0) = 1;
  const Matrix iota = t.projection * kron(unit, Matrix::identity(f, 3));
  CHECK(iota.transpose() * r.gram * iota == B);
}

TEST_CASE("transport on e k G of S4 and the sign rule") {
  const Field f = Field::make(3);
  const Group g = s4();
  const EBimodule eb = e_bimodule(g, 3, f);
  const Rep sgn = sign_rep(g, f);
  const TransportReport r = transport_form(eb.bimodule, eb.gram, sgn, Matrix::identity(f, 1));
  CHECK(r.passed());
  CHECK(r.quotient_dim == 1);
  CHECK(r.classification.tag == FormTag::symmetric);

  // Antisymmetric hyperbolic forms on U + U*.
  const Rep u = inflated_uniserial(g);
  const Rep w = direct_sum(u, dual_rep(u));
  const Matrix B = hyperbolic(f, 2);
  REQUIRE(is_invariant_form(w, B));
  const TransportReport ra = transport_form(eb.bimodule, eb.gram, w, B);
  CHECK(ra.passed());
  CHECK(ra.quotient_dim == 4);
  CHECK(ra.classification.antisymmetric);
  CHECK(ra.gram.transpose() == -ra.gram);

  const Rep w1 = direct_sum(trivial_rep(g, f), trivial_rep(g, f));
  const TransportReport rb = transport_form(eb.bimodule, eb.gram, w1, hyperbolic(f, 1));
  CHECK(rb.passed());
  CHECK(rb.classification.antisymmetric);
}

TEST_CASE("transport preconditions") {
  const Field f = Field::make(3);
  const EBimodule eb = e_bimodule(s4(), 3, f);
  const Rep sgn = sign_rep(s4(), f);
  CHECK_THROWS_AS(transport_form(eb.bimodule, Matrix(f, 6, 6), sgn, Matrix::identity(f, 1)), Error);
  CHECK_THROWS_AS(transport_form(eb.bimodule, eb.gram, sgn, Matrix(f, 1, 1)), Error);
  // Not right projective: trivial bimodule of C3 x C3 over GF(3).
  const Group c3 = cyclic(3);
  const Bimodule triv = Bimodule::make(c3, c3, f, {Matrix::identity(f, 1)}, {Matrix::identity(f, 1)});
  CHECK_FALSE(right_projective(triv).projective);
  CHECK_THROWS_AS(transport_form(triv, Matrix::identity(f, 1), trivial_rep(c3, f), Matrix::identity(f, 1)), Error);
}

TEST_CASE("chain of isomorphisms equals the direct formula") {
  SUBCASE("regular kC2 over GF(3), trivial V") {
    const Field f = Field::make(3);
    const BimodForm reg = regular_bimodule(cyclic(2), f);
    const Rep v = trivial_rep(cyclic(2), f);
    const ChainMaps c = chain_maps(reg.bimodule, form_to_iso(reg.gram), v, Matrix::identity(f, 1));
    CHECK(c.composite.rows() == 1);
    CHECK(c.composite(0, 0) != 0);
    CHECK(c.equal());
    CHECK(c.hat_descends);
  }
  SUBCASE("e k G of S4 at p = 3") {
    const Field f = Field::make(3);
    const Group g = s4();
    const EBimodule eb = e_bimodule(g, 3, f);
    const Rep u = inflated_uniserial(g);
    const Rep w = direct_sum(u, dual_rep(u));
    for (const Rep& v : {sign_rep(g, f), w, direct_sum(trivial_rep(g, f), sign_rep(g, f))}) {
      const Matrix alpha = some_iso(v, dual_rep(v));
      const ChainMaps c = chain_maps(eb.bimodule, form_to_iso(eb.gram), v, alpha);
      CHECK(c.equal());
      CHECK(c.hat_descends);
      CHECK(c.rho_m * c.lambda_m == Matrix::identity(f, eb.bimodule.dim()));
      CHECK(is_invertible(c.composite));
      // H-linear into the dual: composite h = h^-T composite.
      const Rep& hm = c.source.h_module;
      for (std::size_t h = 0; h < hm.group().order(); ++h)
        CHECK(c.composite * hm.image(h) == inverse(hm.image(h))->transpose() * c.composite);
    }
  }
  SUBCASE("regular kS3 over GF(2) with a non-delta form") {
    const Field f = Field::make(2);
    const BimodForm reg = regular_bimodule(s3(), f);
    const auto forms = invariant_bimod_forms(reg.bimodule);
    const Rep v = regular_rep(s3(), f);
    const Matrix alpha = some_iso(v, dual_rep(v));
    for (const auto& x : forms) {
      if (!is_invertible(x)) continue;
      const ChainMaps c = chain_maps(reg.bimodule, form_to_iso(x), v, alpha);
      CHECK(c.equal());
    }
  }
}

TEST_CASE("Lambda_M is a bimodule map") {
  const Field f = Field::make(3);
  const EBimodule eb = e_bimodule(s4(), 3, f);
  const Rep v = sign_rep(s4(), f);
  const ChainMaps c = chain_maps(eb.bimodule, form_to_iso(eb.gram), v, Matrix::identity(f, 1));
  const Rep a = associated_module(dual_bimodule(eb.bimodule)).module;
  const Rep b = associated_module(c.hom_bimodule).module;
  for (std::size_t i = 0; i < a.generator_images().size(); ++i)
    CHECK(c.lambda_m * a.generator_images()[i] == b.generator_images()[i] * c.lambda_m);
}

TEST_CASE("self-duality biconditional on S4 at p = 3") {
  const Field f = Field::make(3);
  const Group g = s4();
  const EBimodule eb = e_bimodule(g, 3, f);
  const Rep u = inflated_uniserial(g);
  const std::vector<LabeledRep> mods = {
      {"trivial", trivial_rep(g, f)},
      {"sign", sign_rep(g, f)},
      {"uniserial", u},
      {"uniserial+dual", direct_sum(u, dual_rep(u))},
      {"uniserial (x) sign", tensor_k(u, sign_rep(g, f))},
  };
  const TheoremAReport r = verify_theorem_A(eb.bimodule, mods);
  CHECK(r.passed());
  CHECK_FALSE(r.rows[2].self_dual);
  CHECK_FALSE(r.rows[2].image_self_dual);
  CHECK(r.rows[3].self_dual);
}

TEST_CASE("type preservation") {
  const Field f = Field::make(3);
  const Group g = s4();
  const EBimodule eb = e_bimodule(g, 3, f);
  const TypeReport r = verify_type_preservation(eb.bimodule, eb.gram, {{"trivial", trivial_rep(g, f)}, {"sign", sign_rep(g, f)}});
  CHECK(r.passed());
  for (const auto& row : r.rows) CHECK(row.type == SelfDualType::symmetric);
}

TEST_CASE("quadratic type transport in characteristic 2") {
  const Field f = Field::make(2);
  const Group g = s3();
  const EBimodule eb = e_bimodule(g, 2, f);
  const QuadraticTransportReport r = verify_quadratic_transport(eb.bimodule, eb.gram, regular_rep(g, f));
  CHECK(r.passed());
  CHECK(r.image_dim == 2);
  CHECK_THROWS_AS(verify_quadratic_transport(eb.bimodule, eb.gram, trivial_rep(g, f)), Error);

  const BimodForm reg = regular_bimodule(cyclic(2), f);
  CHECK(verify_quadratic_transport(reg.bimodule, reg.gram, regular_rep(cyclic(2), f)).passed());
}
