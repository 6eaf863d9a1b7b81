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

#include "morita/bimodule.hpp"

namespace morita {

namespace {

void check_commuting(const Rep& left, const Rep& right) {
  for (const auto& l : left.generator_images())
    for (const auto& r : right.generator_images()) {
      const Matrix rt = r.transpose();
      if (!(l * rt == rt * l)) fail(ErrorCode::NonCommutingActions, "left and right actions do not commute");
    }
}

std::vector<Matrix> inverse_transposes(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  for (const auto& m : ms) out.push_back(inverse(m)->transpose());
  return out;
}

}  // namespace

Bimodule Bimodule::make(Group h, Group g, Field f, std::vector<Matrix> left_images, std::vector<Matrix> right_images) {
  Rep left = Rep::make(std::move(h), f, std::move(left_images));
  Rep right = Rep::make(std::move(g), f, std::move(right_images));
  if (left.dim() != right.dim()) fail(ErrorCode::ShapeMismatch, "left and right images have different sizes");
  check_commuting(left, right);
  return make_trusted(std::move(left), std::move(right));
}

Bimodule Bimodule::make_trusted(Rep left, Rep right) {
  require_same_field(left.field(), right.field(), "bimodule");
  if (left.dim() != right.dim()) fail(ErrorCode::ShapeMismatch, "left and right images have different sizes");
  Bimodule m;
  m.left_ = std::move(left);
  m.right_ = std::move(right);
  return m;
}

void Bimodule::validate_commutation_exhaustive() const {
  for (std::size_t h = 0; h < left_group().order(); ++h)
    for (std::size_t g = 0; g < right_group().order(); ++g) {
      const Matrix r = right_operator(g);
      if (!(left_.image(h) * r == r * left_.image(h)))
        fail(ErrorCode::NonCommutingActions, "left and right actions do not commute");
    }
}

Rep as_left_g_module(const Bimodule& m) {
  return Rep::make_trusted(m.right_group(), m.field(), m.dim(), inverse_transposes(m.right().generator_images()));
}

AssociatedModule associated_module(const Bimodule& m) {
  DirectProduct prod = direct_product(m.left_group(), m.right_group());
  std::vector<Matrix> gens = m.left().generator_images();
  for (auto& x : inverse_transposes(m.right().generator_images())) gens.push_back(std::move(x));
  Rep rep = Rep::make_trusted(prod.group, m.field(), m.dim(), std::move(gens));
  return {std::move(prod), std::move(rep)};
}

Bimodule dual_bimodule(const Bimodule& m) {
  return Bimodule::make_trusted(dual_rep(m.left()), dual_rep(m.right()));
}

std::vector<Matrix> invariant_bimod_forms(const Bimodule& m) {
  // Same system as for the associated H x G module, solved on the
  // generators of both sides without enumerating the product group.
  const Field& f = m.field();
  const std::size_t d = m.dim();
  std::vector<Matrix> blocks;
  const Matrix id = Matrix::identity(f, d * d);
  for (const auto& l : m.left().generator_images()) blocks.push_back(kron(l.transpose(), l.transpose()) - id);
  for (const auto& r : m.right().generator_images()) blocks.push_back(kron(r, r) - id);
  const Matrix basis = blocks.empty() ? Matrix::identity(f, d * d) : common_nullspace(blocks);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(unvec(basis.col(c), d, d));
  return out;
}

bool is_invariant_bimod_form(const Bimodule& m, const Matrix& gram) {
  for (std::size_t h = 0; h < m.left_group().order(); ++h) {
    const Matrix& l = m.left().image(h);
    const Matrix lx = l.transpose() * gram * l;
    if (!(lx == gram)) return false;
    for (std::size_t g = 0; g < m.right_group().order(); ++g) {
      const Matrix a = m.left().image(h) * m.right_operator(g);
      if (!(a.transpose() * gram * a == gram)) return false;
    }
  }
  return true;
}

Matrix form_to_iso(const Matrix& gram) { return gram.transpose(); }
Matrix iso_to_form(const Matrix& iso) { return iso.transpose(); }

BimodForm regular_bimodule(const Group& g, const Field& f) {
  const std::size_t n = g.order();
  std::vector<Matrix> left, right;
  for (std::size_t j = 0; j < g.num_generators(); ++j) {
    const std::size_t s = g.generator_index(j);
    Matrix l(f, n, n), r(f, n, n);
    for (std::size_t x = 0; x < n; ++x) {
      l(g.mul(s, x), x) = 1;
      // e_x . s = e_{xs}; stored rho is the transpose of that operator.
      r(x, g.mul(x, s)) = 1;
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  Bimodule m = Bimodule::make_trusted(Rep::make_trusted(g, f, n, std::move(left)), Rep::make_trusted(g, f, n, std::move(right)));
  return {std::move(m), Matrix::identity(f, n)};
}

EBimodule e_bimodule(const Group& g, std::uint32_t p, const Field& f) {
  if (f.characteristic() != p) fail(ErrorCode::WrongCharacteristic, "field characteristic differs from p");
  Subgroup n = o_p_prime(g, p);
  Quotient q = quotient_group(g, n);
  const std::size_t k = q.representatives.size();
  const Group& h = q.group;
  GroupAlgebraElement e = GroupAlgebraElement::average(g, f, n.members);
  // Basis e t_c: coefficient 1/|N| on every element of the coset t_c N.
  Matrix emb(f, g.order(), k);
  const Elem inv_n = f.inv(f.from_int(static_cast<std::int64_t>(n.order())));
  for (std::size_t x = 0; x < g.order(); ++x) emb(x, q.coset_of[x]) = inv_n;
  std::vector<Matrix> left;
  for (const auto& perm : h.generators()) {
    Matrix l(f, k, k);
    for (std::uint32_t c = 0; c < k; ++c) l(perm(c), c) = 1;
    left.push_back(std::move(l));
  }
  std::vector<Matrix> right;
  for (std::size_t j = 0; j < g.num_generators(); ++j) {
    const std::size_t s = g.generator_index(j);
    Matrix r(f, k, k);
    for (std::size_t c = 0; c < k; ++c) r(c, q.coset_of[g.mul(q.representatives[c], s)]) = 1;
    right.push_back(std::move(r));
  }
  Bimodule m = Bimodule::make_trusted(Rep::make_trusted(h, f, k, std::move(left)), Rep::make_trusted(g, f, k, std::move(right)));
  Matrix gram = emb.transpose() * emb;
  const bool warn = !is_p_solvable(g, p);
  return EBimodule{std::move(m), std::move(gram), std::move(e), std::move(n), std::move(q), std::move(emb), warn};
}

ProjectivityResult right_projective(const Bimodule& m) { return is_projective(as_left_g_module(m)); }

}  // namespace morita
