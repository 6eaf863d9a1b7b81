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

#include "morita/rep.hpp"

#include <mutex>
#include <random>

#include "morita/kernels.hpp"

namespace morita {

namespace detail {

struct RepData {
  Group group;
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  mutable std::once_flag filled;
  mutable std::vector<Matrix> images;

  void fill() const {
    std::call_once(filled, [this] {
      const std::size_t n = group.order();
      std::vector<Matrix> out(n);
      out[0] = Matrix::identity(field, dim);
      for (std::size_t i = 1; i < n; ++i) out[i] = out[group.parent(i)] * gens[group.parent_generator(i)];
      images = std::move(out);
    });
  }
};

}  // namespace detail

namespace {

constexpr int kRandomRelationChecks = 50;
constexpr std::uint64_t kRelationSeed = 0x6a09e667f3bcc909ULL;

}  // namespace

Rep Rep::make_trusted(Group g, Field f, std::size_t dim, std::vector<Matrix> gens) {
  if (gens.size() != g.num_generators()) fail(ErrorCode::ShapeMismatch, "one image per group generator is required");
  for (const auto& m : gens) {
    require_same_field(m.field(), f, "rep image");
    if (m.rows() != dim || m.cols() != dim) fail(ErrorCode::ShapeMismatch, "generator image has the wrong shape");
  }
  auto d = std::make_shared<detail::RepData>();
  d->group = std::move(g);
  d->field = f;
  d->dim = dim;
  d->gens = std::move(gens);
  Rep r;
  r.d_ = std::move(d);
  return r;
}

Rep Rep::make(Group g, Field f, std::vector<Matrix> gens) {
  const std::size_t dim = gens.empty() ? 0 : gens[0].rows();
  if (gens.empty() && g.num_generators() != 0) fail(ErrorCode::ShapeMismatch, "missing generator images");
  for (const auto& m : gens)
    if (!m.is_square() || m.rows() != dim) fail(ErrorCode::ShapeMismatch, "generator images must be square of equal size");
  for (const auto& m : gens)
    if (!is_invertible(m)) fail(ErrorCode::SingularGeneratorImage, "generator image is singular");
  Rep r = make_trusted(std::move(g), f, dim, std::move(gens));
  const Group& grp = r.group();
  std::mt19937_64 rng(kRelationSeed);
  for (int t = 0; t < kRandomRelationChecks && grp.order() > 1; ++t) {
    const std::size_t a = rng() % grp.order(), b = rng() % grp.order();
    if (!(r.image(a) * r.image(b) == r.image(grp.mul(a, b))))
      fail(ErrorCode::RelationViolation, "generator images violate a group relation");
  }
  return r;
}

const Group& Rep::group() const { return d_->group; }
const Field& Rep::field() const { return d_->field; }
std::size_t Rep::dim() const { return d_->dim; }
const std::vector<Matrix>& Rep::generator_images() const { return d_->gens; }

const Matrix& Rep::image(std::size_t i) const {
  d_->fill();
  return d_->images.at(i);
}

void Rep::validate_exhaustive() const {
  const Group& g = group();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < g.num_generators(); ++j)
      if (!(image(x) * d_->gens[j] == image(g.mul(x, g.generator_index(j)))))
        fail(ErrorCode::RelationViolation, "generator images violate a group relation");
}

void require_compatible(const Rep& a, const Rep& b, std::string_view where) {
  require_same_group(a.group(), b.group(), where);
  require_same_field(a.field(), b.field(), where);
}

Rep trivial_rep(const Group& g, const Field& f) {
  return Rep::make_trusted(g, f, 1, std::vector<Matrix>(g.num_generators(), Matrix::identity(f, 1)));
}

Rep permutation_rep(const Group& g, const Field& f) {
  std::vector<Matrix> gens;
  for (const auto& p : g.generators()) {
    Matrix m(f, g.degree(), g.degree());
    for (std::uint32_t x = 0; x < g.degree(); ++x) m(p(x), x) = 1;
    gens.push_back(std::move(m));
  }
  return Rep::make_trusted(g, f, g.degree(), std::move(gens));
}

Rep regular_rep(const Group& g, const Field& f) {
  std::vector<Matrix> gens;
  const std::size_t n = g.order();
  for (std::size_t j = 0; j < g.num_generators(); ++j) {
    Matrix m(f, n, n);
    for (std::size_t x = 0; x < n; ++x) m(g.mul(g.generator_index(j), x), x) = 1;
    gens.push_back(std::move(m));
  }
  return Rep::make_trusted(g, f, n, std::move(gens));
}

Rep dual_rep(const Rep& v) {
  std::vector<Matrix> gens;
  for (const auto& m : v.generator_images()) gens.push_back(inverse(m)->transpose());
  return Rep::make_trusted(v.group(), v.field(), v.dim(), std::move(gens));
}

Rep direct_sum(const Rep& v, const Rep& w) {
  require_compatible(v, w, "direct_sum");
  std::vector<Matrix> gens;
  for (std::size_t j = 0; j < v.generator_images().size(); ++j)
    gens.push_back(block_diag(v.generator_images()[j], w.generator_images()[j]));
  return Rep::make_trusted(v.group(), v.field(), v.dim() + w.dim(), std::move(gens));
}

Rep tensor_k(const Rep& v, const Rep& w) {
  require_compatible(v, w, "tensor_k");
  std::vector<Matrix> gens;
  for (std::size_t j = 0; j < v.generator_images().size(); ++j)
    gens.push_back(kron(v.generator_images()[j], w.generator_images()[j]));
  return Rep::make_trusted(v.group(), v.field(), v.dim() * w.dim(), std::move(gens));
}

Rep extend_scalars(const Rep& v, const Field& target) {
  std::vector<Matrix> gens;
  for (const auto& m : v.generator_images()) gens.push_back(extend_matrix(m, target));
  return Rep::make_trusted(v.group(), target, v.dim(), std::move(gens));
}

Rep pullback(const Rep& v, const GroupHom& phi) {
  require_same_group(phi.target(), v.group(), "pullback");
  const Group& src = phi.source();
  std::vector<Matrix> gens;
  for (std::size_t j = 0; j < src.num_generators(); ++j) gens.push_back(v.image(phi(src.generator_index(j))));
  return Rep::make_trusted(src, v.field(), v.dim(), std::move(gens));
}

namespace {

std::vector<Elem> matvec(const Matrix& a, std::span<const Elem> v) {
  const Field& f = a.field();
  std::vector<Elem> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] && v[j]) acc = f.add(acc, f.mul(row[j], v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix spin_with(const std::vector<Matrix>& ops, const Matrix& seeds) {
  SpanBuilder sb(seeds.field(), seeds.rows());
  const Matrix st = seeds.transpose();
  for (std::size_t j = 0; j < st.rows(); ++j) sb.add(st.row(j));
  for (std::size_t i = 0; i < sb.dim() && sb.dim() < sb.ambient_dim(); ++i) {
    const std::vector<Elem> v(sb.vector(i).begin(), sb.vector(i).end());
    for (const auto& op : ops) sb.add(matvec(op, v));
  }
  return sb.basis();
}

}  // namespace

Matrix spin(const Rep& v, const Matrix& seeds) { return spin_with(v.generator_images(), seeds); }

Matrix spin_transposed(const Rep& v, const Matrix& seeds) {
  std::vector<Matrix> ops;
  for (const auto& m : v.generator_images()) ops.push_back(m.transpose());
  return spin_with(ops, seeds);
}

bool is_invariant_subspace(const Rep& v, const Matrix& basis) {
  for (const auto& m : v.generator_images())
    if (!solve(basis, m * basis)) return false;
  return true;
}

Rep submodule_rep(const Rep& v, const Matrix& basis) {
  if (rank(basis) != basis.cols()) fail(ErrorCode::PreconditionFailed, "submodule basis is not independent");
  std::vector<Matrix> gens;
  for (const auto& m : v.generator_images()) {
    auto a = solve(basis, m * basis);
    if (!a) fail(ErrorCode::PreconditionFailed, "subspace is not invariant");
    gens.push_back(std::move(*a));
  }
  return Rep::make_trusted(v.group(), v.field(), basis.cols(), std::move(gens));
}

Rep quotient_rep(const Rep& v, const Matrix& basis) {
  const std::size_t d = v.dim(), k = basis.cols();
  const Echelon e = rref(basis.transpose());
  if (e.rank() != k) fail(ErrorCode::PreconditionFailed, "submodule basis is not independent");
  std::vector<bool> pivot(d, false);
  for (auto c : e.pivots) pivot[c] = true;
  Matrix t(v.field(), d, d);
  t.set_block(0, 0, basis);
  std::size_t col = k;
  for (std::size_t i = 0; i < d; ++i)
    if (!pivot[i]) t(i, col++) = 1;
  const Matrix tinv = *inverse(t);
  std::vector<Matrix> gens;
  for (const auto& m : v.generator_images()) {
    const Matrix c = tinv * m * t;
    if (!c.block(k, 0, d - k, k).is_zero()) fail(ErrorCode::PreconditionFailed, "subspace is not invariant");
    gens.push_back(c.block(k, k, d - k, d - k));
  }
  return Rep::make_trusted(v.group(), v.field(), d - k, std::move(gens));
}

std::vector<Matrix> hom_space(const Rep& v, const Rep& w) {
  require_compatible(v, w, "hom_space");
  const Field& f = v.field();
  const std::size_t dv = v.dim(), dw = w.dim();
  std::vector<Matrix> blocks;
  const Matrix iw = Matrix::identity(f, dw), iv = Matrix::identity(f, dv);
  for (std::size_t j = 0; j < v.generator_images().size(); ++j)
    blocks.push_back(kron(iw, v.generator_images()[j].transpose()) - kron(w.generator_images()[j], iv));
  const Matrix basis = blocks.empty() ? Matrix::identity(f, dv * dw) : common_nullspace(blocks);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(unvec(basis.col(c), dw, dv));
  return out;
}

std::optional<RepMap> is_isomorphic(const Rep& v, const Rep& w, std::uint64_t seed) {
  require_compatible(v, w, "is_isomorphic");
  if (v.dim() != w.dim()) return std::nullopt;
  if (v.dim() == 0) return RepMap{v, w, Matrix(v.field(), 0, 0)};
  const auto basis = hom_space(v, w);
  for (const auto& t : basis)
    if (is_invertible(t)) return RepMap{v, w, t};
  if (basis.size() < 2) return std::nullopt;
  const Field& f = v.field();
  std::mt19937_64 rng(seed);
  constexpr int kCombinations = 200;
  for (int t = 0; t < kCombinations; ++t) {
    Matrix m(f, w.dim(), v.dim());
    for (const auto& b : basis) m += b.scaled(static_cast<Elem>(rng() % f.order()));
    if (is_invertible(m)) return RepMap{v, w, m};
  }
  return std::nullopt;
}

Matrix higman_trace(const Rep& v, const Matrix& phi) {
  Matrix acc(v.field(), v.dim(), v.dim());
  const Group& g = v.group();
  for (std::size_t x = 0; x < g.order(); ++x) acc += v.image(x) * phi * v.image(g.inv(x));
  return acc;
}

namespace {

std::size_t element_order(const Group& g, std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

bool is_power_of(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::size_t> subgroup_generators(const Group& g, const Subgroup& s) {
  std::vector<std::size_t> gens;
  Subgroup cur{{0}};
  for (auto x : s.members) {
    if (cur.order() == s.order()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace

Subgroup sylow_subgroup(const Group& g, std::uint32_t p) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  Subgroup cur{{0}};
  std::vector<std::size_t> gens;
  // A p-subgroup that is not Sylow has a p-element in its normalizer
  // outside itself, so greedy extension reaches a Sylow subgroup.
  while (cur.order() < target) {
    bool grew = false;
    for (std::size_t x = 1; x < g.order() && !grew; ++x) {
      if (cur.contains(x) || !is_power_of(element_order(g, x), p)) continue;
      bool normalizes = true;
      for (auto y : gens)
        if (!cur.contains(g.conjugate(y, x))) normalizes = false;
      if (!normalizes) continue;
      auto next_gens = gens;
      next_gens.push_back(x);
      Subgroup next = generated_subgroup(g, next_gens);
      if (!is_power_of(next.order(), p)) continue;
      cur = std::move(next);
      gens = std::move(next_gens);
      grew = true;
    }
    if (!grew) fail(ErrorCode::PreconditionFailed, "Sylow search stalled");
  }
  return cur;
}

ProjectivityResult is_projective(const Rep& v) {
  const Field& f = v.field();
  const Group& g = v.group();
  const std::uint32_t p = f.characteristic();
  const std::size_t d = v.dim();
  ProjectivityResult out;
  if (g.order() % p != 0) {
    out.projective = true;
    out.witness = Matrix::identity(f, d).scaled(f.inv(f.from_int(static_cast<std::int64_t>(g.order()))));
    return out;
  }
  const Subgroup sylow = sylow_subgroup(g, p);
  out.sylow_order = sylow.order();
  // Restricted to the Sylow subgroup P, V is projective iff free, iff
  // dim V = |P| dim(V / J V) with J the augmentation ideal of kP.
  std::vector<Matrix> parts;
  for (auto x : subgroup_generators(g, sylow)) parts.push_back((v.image(x) - Matrix::identity(f, d)).transpose());
  const Echelon jv = parts.empty() ? Echelon{Matrix(f, 0, d), {}, {}} : rref(vstack(parts));
  const std::size_t r = d - jv.rank();
  if (d != sylow.order() * r) return out;
  std::vector<bool> pivot(d, false);
  for (auto c : jv.pivots) pivot[c] = true;
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < d; ++i)
    if (!pivot[i]) free_coords.push_back(i);
  // Free basis {x w_k}: x over P (identity first), w_k unit vectors
  // complementing JV.
  Matrix b(f, d, d);
  std::size_t col = 0;
  for (auto x : sylow.members)
    for (auto i : free_coords) {
      const Matrix& m = v.image(x);
      for (std::size_t row = 0; row < d; ++row) b(row, col) = m(row, i);
      ++col;
    }
  const auto binv = inverse(b);
  if (!binv) fail(ErrorCode::PreconditionFailed, "free basis construction failed");
  Matrix proj(f, d, d);
  for (std::size_t k = 0; k < r; ++k) proj(k, k) = 1;
  const Elem index = f.from_int(static_cast<std::int64_t>(g.order() / sylow.order()));
  Matrix phi = (b * proj * *binv).scaled(f.inv(index));
  if (!higman_trace(v, phi).is_identity()) fail(ErrorCode::PreconditionFailed, "Higman witness failed to verify");
  out.projective = true;
  out.witness = std::move(phi);
  return out;
}

ProjectivityResult higman_solve(const Rep& v) {
  const Field& f = v.field();
  const Group& g = v.group();
  std::vector<Matrix> left, right;
  for (std::size_t x = 0; x < g.order(); ++x) {
    left.push_back(v.image(x));
    right.push_back(v.image(g.inv(x)).transpose());
  }
  const Matrix a = kernels::kron_sum(left, right);
  ProjectivityResult out;
  out.sylow_order = 0;
  auto phi = solve(a, vec(Matrix::identity(f, v.dim())));
  if (phi) {
    out.projective = true;
    out.witness = unvec(*phi, v.dim(), v.dim());
  }
  return out;
}

}  // namespace morita
