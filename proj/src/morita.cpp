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

#include "morita/morita.hpp"

#include <random>

#include "morita/kernels.hpp"
#include "morita/meataxe.hpp"

namespace morita {

namespace {

std::vector<std::size_t> generator_elements(const Group& g) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.num_generators(); ++j) out.push_back(g.generator_index(j));
  return out;
}

// Rows span the relations (m g) (x) v - m (x) g v: they are the
// transposes of D_g = kron(R(g), I) - kron(I, sigma(g)).
Echelon relation_echelon(const Bimodule& m, const Rep& v, const std::vector<std::size_t>& elements) {
  const Field& f = m.field();
  const std::size_t n = m.dim() * v.dim();
  if (elements.empty()) return rref(Matrix(f, 0, n));
  const Matrix im = Matrix::identity(f, m.dim());
  const Matrix iv = Matrix::identity(f, v.dim());
  std::vector<Matrix> blocks;
  blocks.reserve(elements.size());
  for (auto g : elements) blocks.push_back(kron(m.right().image(g), iv) - kron(im, v.image(g).transpose()));
  return rref(vstack(blocks));
}

Matrix ambient_transport(const Bimodule& m, const Rep& v, const Matrix& b, const Matrix& B) {
  const Group& g = m.right_group();
  std::vector<Matrix> left, right;
  left.reserve(g.order());
  right.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t xi = g.inv(x);
    left.push_back(m.right().image(xi) * b);
    right.push_back(B * v.image(xi));
  }
  return kernels::kron_sum(left, right);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::PreconditionFailed, what);
}

bool intertwines(const Rep& a, const Rep& b, const Matrix& phi) {
  for (std::size_t i = 0; i < a.generator_images().size(); ++i)
    if (!(phi * a.generator_images()[i] == b.generator_images()[i] * phi)) return false;
  return true;
}

// Columns of `basis` are independent; returns X with basis * X = y.
Matrix coordinates(const Matrix& basis, const Matrix& y) {
  auto x = solve(basis, y);
  if (!x) fail(ErrorCode::RelationViolation, "vector outside the expected subspace");
  return *x;
}

// Permutation (row-major vec) taking vec(A) for A of shape r x c to vec(A^T).
Matrix vec_transposer(const Field& f, std::size_t r, std::size_t c) {
  Matrix t(f, r * c, r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t(j * r + i, i * c + j) = 1;
  return t;
}

}  // namespace

TensorModule tensor_over_kG(const Bimodule& m, const Rep& v) {
  require_same_group(m.right_group(), v.group(), "tensor over kG");
  require_same_field(m.field(), v.field(), "tensor over kG");
  const Field& f = m.field();
  const std::size_t n = m.dim() * v.dim();
  const Echelon ech = relation_echelon(m, v, generator_elements(v.group()));
  const std::size_t r = ech.rank();

  TensorModule t;
  t.bimodule = m;
  t.module = v;
  t.ambient_dim = n;
  t.relations = ech.reduced.block(0, 0, r, n).transpose();

  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const std::size_t q = free.size();
  t.section = Matrix(f, n, q);
  t.projection = Matrix(f, q, n);
  for (std::size_t a = 0; a < q; ++a) {
    t.section(free[a], a) = 1;
    t.projection(a, free[a]) = 1;
    // Reducing t modulo the echelon rows clears the pivot coordinates.
    for (std::size_t j = 0; j < r; ++j) t.projection(a, ech.pivots[j]) = f.neg(ech.reduced(j, free[a]));
  }

  const Matrix iv = Matrix::identity(f, v.dim());
  std::vector<Matrix> h_images;
  for (const auto& l : m.left().generator_images()) {
    const Matrix lift = kron(l, iv);
    if (!(t.projection * lift * t.relations).is_zero())
      fail(ErrorCode::RelationViolation, "relation subspace is not stable under H");
    h_images.push_back(t.projection * lift * t.section);
  }
  t.h_module = Rep::make_trusted(m.left_group(), f, q, std::move(h_images));
  return t;
}

std::size_t full_group_relation_rank(const Bimodule& m, const Rep& v) {
  std::vector<std::size_t> all(v.group().order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return relation_echelon(m, v, all).rank();
}

TransportReport transport_form(const Bimodule& m, const Matrix& b, const Rep& v, const Matrix& B) {
  return transport_form(tensor_over_kG(m, v), b, B);
}

TransportReport transport_form(const TensorModule& t, const Matrix& b, const Matrix& B) {
  const Bimodule& m = t.bimodule;
  const Rep& v = t.module;
  TransportReport rep;
  rep.b_class = classify_form(b);
  rep.B_class = classify_form(B);
  require(b.rows() == m.dim() && b.cols() == m.dim(), "bimodule form has the wrong shape");
  require(B.rows() == v.dim() && B.cols() == v.dim(), "module form has the wrong shape");
  require(rep.b_class.nondegenerate, "bimodule form is degenerate");
  require(rep.B_class.nondegenerate, "module form is degenerate");
  require(is_invariant_bimod_form(m, b), "bimodule form is not H x G-invariant");
  require(is_invariant_form(v, B), "module form is not G-invariant");
  require(right_projective(m).projective, "bimodule is not projective as a G-module");

  const Matrix amb = ambient_transport(m, v, b, B);
  rep.descends = (t.relations.transpose() * amb).is_zero() && (amb * t.relations).is_zero();
  rep.gram = t.section.transpose() * amb * t.section;
  rep.quotient_dim = t.dim();
  rep.classification = classify_form(rep.gram);
  rep.nondegenerate = rep.classification.nondegenerate;
  rep.h_invariant = is_invariant_form(t.h_module, rep.gram);
  return rep;
}

ChainMaps chain_maps(const Bimodule& m, const Matrix& beta, const Rep& v, const Matrix& alpha) {
  const Field& f = m.field();
  const Group& g = m.right_group();
  const std::size_t dm = m.dim(), dv = v.dim(), ng = g.order();

  const Bimodule mdual = dual_bimodule(m);
  const Rep vdual = dual_rep(v);
  require(is_invertible(beta), "beta is not invertible");
  require(is_invertible(alpha), "alpha is not invertible");
  require(intertwines(associated_module(m).module, associated_module(mdual).module, beta),
          "beta is not H x G-linear");
  require(intertwines(v, vdual, alpha), "alpha is not G-linear");
  require(right_projective(m).projective, "bimodule is not projective as a G-module");

  ChainMaps c;
  c.source = tensor_over_kG(m, v);
  c.dual_tensor = tensor_over_kG(mdual, vdual);

  // Hom_kG(M, kG): F R(g) = R_reg(g) F on the generators.
  auto left_mult = [&](std::size_t x) {
    Matrix l(f, ng, ng);
    for (std::size_t y = 0; y < ng; ++y) l(g.mul(x, y), y) = 1;
    return l;
  };
  {
    const Matrix ig = Matrix::identity(f, ng);
    const Matrix im = Matrix::identity(f, dm);
    std::vector<Matrix> blocks;
    for (auto s : generator_elements(g)) {
      Matrix rreg(f, ng, ng);
      for (std::size_t x = 0; x < ng; ++x) rreg(g.mul(x, s), x) = 1;
      blocks.push_back(kron(ig, m.right().image(s)) - kron(rreg, im));
    }
    c.hom_basis = blocks.empty() ? Matrix::identity(f, ng * dm) : common_nullspace(blocks);
    const std::size_t dh = c.hom_basis.cols();
    std::vector<Matrix> left, right;
    for (std::size_t j = 0; j < m.left_group().num_generators(); ++j) {
      const std::size_t h = m.left_group().generator_index(j);
      const Matrix li = m.left().image(m.left_group().inv(h));
      left.push_back(coordinates(c.hom_basis, kron(ig, li.transpose()) * c.hom_basis));
    }
    for (auto s : generator_elements(g)) {
      const Matrix op = coordinates(c.hom_basis, kron(left_mult(g.inv(s)), im) * c.hom_basis);
      right.push_back(op.transpose());
    }
    c.hom_bimodule = Bimodule::make_trusted(Rep::make_trusted(m.left_group(), f, dh, std::move(left)),
                                            Rep::make_trusted(g, f, dh, std::move(right)));
  }
  c.hom_tensor = tensor_over_kG(c.hom_bimodule, vdual);

  // Lambda_M(phi)(m) = sum_x phi(m x^-1) x; row x of F is (rho(x^-1) phi)^T.
  {
    std::vector<Matrix> rows;
    for (std::size_t x = 0; x < ng; ++x) rows.push_back(m.right().image(g.inv(x)));
    c.lambda_m = coordinates(c.hom_basis, vstack(rows));
    c.rho_m = c.hom_basis.block(0, 0, dm, c.hom_basis.cols());
  }

  // Hom_kG(M, V*) with V* a right module by f g = sigma(g)^T f.
  {
    const Matrix iv = Matrix::identity(f, dv);
    const Matrix im = Matrix::identity(f, dm);
    std::vector<Matrix> blocks;
    for (auto s : generator_elements(g))
      blocks.push_back(kron(iv, m.right().image(s)) - kron(v.image(s).transpose(), im));
    c.hom_v_basis = blocks.empty() ? Matrix::identity(f, dv * dm) : common_nullspace(blocks);
  }

  c.beta_alpha = c.dual_tensor.projection * kron(beta, alpha) * c.source.section;
  c.lambda_id = c.hom_tensor.projection * kron(c.lambda_m, Matrix::identity(f, dv)) * c.dual_tensor.section;

  // hat(F (x) e_k)[w][j] = sum_x F[x][j] sigma(x)[k][w].
  const std::size_t dh = c.hom_basis.cols();
  Matrix hat_amb(f, dv * dm, dh * dv);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t x = 0; x < ng; ++x) {
      const Matrix& sx = v.image(x);
      for (std::size_t j = 0; j < dm; ++j) {
        const Elem fx = c.hom_basis(x * dm + j, i);
        if (!fx) continue;
        for (std::size_t k = 0; k < dv; ++k)
          for (std::size_t w = 0; w < dv; ++w)
            hat_amb(w * dm + j, i * dv + k) = f.add(hat_amb(w * dm + j, i * dv + k), f.mul(fx, sx(k, w)));
      }
    }
  c.hat_descends = (hat_amb * c.hom_tensor.relations).is_zero();
  c.hat = coordinates(c.hom_v_basis, hat_amb * c.hom_tensor.section);

  // Phi(A)(m (x) v) = (A m)(v): the ambient functional is vec(A^T).
  c.phi = c.source.section.transpose() * vec_transposer(f, dv, dm) * c.hom_v_basis;

  c.composite = c.phi * c.hat * c.lambda_id * c.beta_alpha;
  const Matrix amb = ambient_transport(m, v, iso_to_form(beta), iso_to_form(alpha));
  c.direct = (c.source.section.transpose() * amb * c.source.section).transpose();
  return c;
}

bool is_self_dual(const Rep& v, std::uint64_t seed) { return is_isomorphic(v, dual_rep(v), seed).has_value(); }

std::optional<Matrix> nondegenerate_bimod_form(const Bimodule& m, std::uint64_t seed) {
  const auto basis = invariant_bimod_forms(m);
  for (const auto& x : basis)
    if (is_invertible(x)) return x;
  if (basis.size() < 2) return std::nullopt;
  const Field& f = m.field();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix x(f, m.dim(), m.dim());
    for (const auto& bx : basis) x += bx.scaled(static_cast<Elem>(rng() % f.order()));
    if (is_invertible(x)) return x;
  }
  return std::nullopt;
}

bool TheoremAReport::passed() const {
  for (const auto& r : rows)
    if (!r.holds()) return false;
  return true;
}

TheoremAReport verify_theorem_A(const Bimodule& m, const std::vector<LabeledRep>& modules, std::uint64_t seed) {
  require(nondegenerate_bimod_form(m, seed).has_value(), "bimodule is not self-dual");
  require(right_projective(m).projective, "bimodule is not projective as a G-module");
  TheoremAReport rep;
  for (const auto& [label, v] : modules) {
    const TensorModule t = tensor_over_kG(m, v);
    TheoremARow row;
    row.label = label;
    row.dim = v.dim();
    row.image_dim = t.dim();
    row.self_dual = is_self_dual(v, seed);
    row.image_self_dual = is_self_dual(t.h_module, seed);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool TypeRow::holds() const {
  if (!transport_passed || type != image_type) return false;
  switch (type) {
    case SelfDualType::symmetric:
      return transported.symmetric;
    case SelfDualType::alternating:
      return transported.alternating || transported.antisymmetric;
    default:
      return false;
  }
}

bool TypeReport::passed() const {
  for (const auto& r : rows)
    if (!r.holds()) return false;
  return true;
}

TypeReport verify_type_preservation(const Bimodule& m, const Matrix& b, const std::vector<LabeledRep>& modules,
                                    std::uint64_t seed) {
  require(classify_form(b).symmetric, "bimodule form is not symmetric");
  TypeReport rep;
  for (const auto& [label, v] : modules) {
    require(is_absolutely_irreducible(v, seed), label + " is not absolutely irreducible");
    const SelfDualResult sd = self_dual_type(v, false, seed);
    require(sd.gram.has_value(), label + " has no unique invariant form");
    const TensorModule t = tensor_over_kG(m, v);
    const TransportReport tr = transport_form(t, b, *sd.gram);
    TypeRow row;
    row.label = label;
    row.type = sd.type;
    row.image_type = self_dual_type(t.h_module, false, seed).type;
    row.transported = tr.classification;
    row.transport_passed = tr.passed();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

QuadraticSide quadratic_side(const Rep& v, std::uint64_t seed) {
  QuadraticSide s;
  s.projective = is_projective(v).projective;
  s.quadratic = quadratic_type(v, seed);
  if (s.quadratic.witness) {
    s.witness_nondegenerate = is_nondegenerate_quadratic(*s.quadratic.witness);
    s.witness_invariant = is_invariant_quadratic(v, *s.quadratic.witness);
  }
  return s;
}

bool side_ok(const QuadraticSide& s) {
  return s.projective && s.quadratic.verdict == QuadraticVerdict::yes && s.witness_nondegenerate &&
         s.witness_invariant;
}

}  // namespace

bool QuadraticTransportReport::passed() const { return side_ok(input) && side_ok(output); }

QuadraticTransportReport verify_quadratic_transport(const Bimodule& m, const Matrix& b, const Rep& p,
                                                    std::uint64_t seed) {
  require(m.field().characteristic() == 2, "quadratic transport needs characteristic 2");
  const FormClass bc = classify_form(b);
  require(bc.symmetric && bc.nondegenerate, "bimodule form is not symmetric and nondegenerate");
  require(is_invariant_bimod_form(m, b), "bimodule form is not H x G-invariant");
  QuadraticTransportReport rep;
  rep.input = quadratic_side(p, seed);
  require(rep.input.projective, "input module is not projective");
  require(side_ok(rep.input), "input module is not of quadratic type");
  const TensorModule t = tensor_over_kG(m, p);
  rep.image_dim = t.dim();
  rep.output = quadratic_side(t.h_module, seed);
  return rep;
}

}  // namespace morita
