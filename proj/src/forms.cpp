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

#include "morita/forms.hpp"

#include <random>

#include "morita/meataxe.hpp"

namespace morita {

std::string_view to_string(FormTag t) {
  switch (t) {
    case FormTag::symmetric: return "symmetric";
    case FormTag::antisymmetric: return "antisymmetric";
    case FormTag::alternating: return "alternating";
    case FormTag::asymmetric: return "asymmetric";
  }
  return "?";
}

std::string_view to_string(SelfDualType t) {
  switch (t) {
    case SelfDualType::symmetric: return "symmetric";
    case SelfDualType::alternating: return "alternating";
    case SelfDualType::asymmetric: return "asymmetric";
    case SelfDualType::not_self_dual: return "not_self_dual";
    case SelfDualType::not_unique: return "not_unique";
  }
  return "?";
}

std::string_view to_string(QuadraticVerdict v) {
  switch (v) {
    case QuadraticVerdict::yes: return "yes";
    case QuadraticVerdict::no: return "no";
    case QuadraticVerdict::probably_no: return "probably_no";
  }
  return "?";
}

FormClass classify_form(const Matrix& gram) {
  if (!gram.is_square()) fail(ErrorCode::ShapeMismatch, "gram matrix must be square");
  const Matrix t = gram.transpose();
  FormClass c;
  c.symmetric = gram == t;
  c.antisymmetric = gram == -t;
  bool zero_diag = true;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i)) zero_diag = false;
  c.alternating = c.antisymmetric && zero_diag;
  c.nondegenerate = rank(gram) == gram.rows();
  if (c.alternating)
    c.tag = FormTag::alternating;
  else if (c.symmetric)
    c.tag = FormTag::symmetric;
  else if (c.antisymmetric)
    c.tag = FormTag::antisymmetric;
  else
    c.tag = FormTag::asymmetric;
  return c;
}

std::vector<Matrix> invariant_bilinear_space(const Rep& v) {
  const Field& f = v.field();
  const std::size_t d = v.dim();
  std::vector<Matrix> blocks;
  const Matrix id = Matrix::identity(f, d * d);
  for (const auto& m : v.generator_images()) {
    const Matrix mt = m.transpose();
    blocks.push_back(kron(mt, mt) - id);
  }
  const Matrix basis = blocks.empty() ? Matrix::identity(f, d * d) : common_nullspace(blocks);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(unvec(basis.col(c), d, d));
  return out;
}

bool is_invariant_form(const Rep& v, const Matrix& gram) {
  for (std::size_t g = 0; g < v.group().order(); ++g)
    if (!(v.image(g).transpose() * gram * v.image(g) == gram)) return false;
  return true;
}

SelfDualResult self_dual_type(const Rep& v, bool require_simple, std::uint64_t seed) {
  if (require_simple && v.dim() > 0 && !meataxe_simple(v, seed).simple)
    fail(ErrorCode::NotSimple, "module has a proper submodule");
  const auto space = invariant_bilinear_space(v);
  SelfDualResult out;
  out.space_dim = space.size();
  if (space.empty()) {
    out.type = SelfDualType::not_self_dual;
    return out;
  }
  if (space.size() >= 2) {
    out.type = SelfDualType::not_unique;
    return out;
  }
  out.gram = space[0];
  out.form_class = classify_form(space[0]);
  if (out.form_class.alternating)
    out.type = SelfDualType::alternating;
  else if (out.form_class.symmetric)
    out.type = SelfDualType::symmetric;
  else
    out.type = SelfDualType::asymmetric;
  return out;
}

Elem QuadraticForm::operator()(const Matrix& column) const {
  const Matrix r = column.transpose() * upper * column;
  return r(0, 0);
}

Matrix normalize_quadratic(const Matrix& a) {
  const Field& f = a.field();
  Matrix u(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    u(i, i) = a(i, i);
    for (std::size_t j = i + 1; j < a.cols(); ++j) u(i, j) = f.add(a(i, j), a(j, i));
  }
  return u;
}

namespace {

void require_char2(const Field& f) {
  if (f.characteristic() != 2) fail(ErrorCode::WrongCharacteristic, "quadratic forms need characteristic 2");
}

std::vector<std::pair<std::size_t, std::size_t>> upper_positions(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) out.emplace_back(i, j);
  return out;
}

Elem eval_q(const Matrix& upper, std::span<const Elem> v) {
  const Field& f = upper.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < upper.rows(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = i; j < upper.cols(); ++j)
      if (upper(i, j) && v[j]) acc = f.add(acc, f.mul(upper(i, j), f.mul(v[i], v[j])));
  }
  return acc;
}

}  // namespace

std::vector<Matrix> invariant_quadratic_space(const Rep& v) {
  const Field& f = v.field();
  require_char2(f);
  const std::size_t d = v.dim();
  const auto pos = upper_positions(d);
  const std::size_t n = pos.size();
  std::vector<Matrix> blocks;
  for (const auto& m : v.generator_images()) {
    // Column u: coordinates of normalize(rho^T E_u rho) - E_u, where
    // (rho^T E_ij rho)[a][b] = rho[i][a] rho[j][b].
    Matrix blk(f, n, n);
    for (std::size_t u = 0; u < n; ++u) {
      const auto [i, j] = pos[u];
      for (std::size_t r = 0; r < n; ++r) {
        const auto [a, b] = pos[r];
        Elem val = f.mul(m(i, a), m(j, b));
        if (a != b) val = f.add(val, f.mul(m(i, b), m(j, a)));
        blk(r, u) = val;
      }
      blk(u, u) = f.sub(blk(u, u), 1);
    }
    blocks.push_back(std::move(blk));
  }
  const Matrix basis = blocks.empty() ? Matrix::identity(f, n) : common_nullspace(blocks);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    Matrix u(f, d, d);
    for (std::size_t r = 0; r < n; ++r) u(pos[r].first, pos[r].second) = basis(r, c);
    out.push_back(std::move(u));
  }
  return out;
}

Matrix polarize(const Matrix& upper) {
  require_char2(upper.field());
  return upper + upper.transpose();
}

Matrix quadratic_radical(const Matrix& upper) {
  const Field& f = upper.field();
  require_char2(f);
  const Matrix radb = nullspace(polarize(upper));
  const std::size_t m = radb.cols();
  if (m == 0) return radb;
  // On rad B, Q(sum c_i r_i) = (sum c_i sqrt(Q(r_i)))^2, a linear condition.
  Matrix s(f, 1, m);
  const Matrix rt = radb.transpose();
  for (std::size_t i = 0; i < m; ++i) s(0, i) = f.pth_root(eval_q(upper, rt.row(i)));
  return radb * nullspace(s);
}

bool is_nondegenerate_quadratic(const Matrix& upper) { return quadratic_radical(upper).cols() == 0; }

bool is_invariant_quadratic(const Rep& v, const Matrix& upper) {
  const Field& f = v.field();
  const std::size_t d = v.dim();
  // Q is determined by its values on basis vectors and on pairwise sums.
  std::vector<std::vector<Elem>> probes;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Elem> e(d, 0);
    e[i] = 1;
    probes.push_back(e);
    for (std::size_t j = i + 1; j < d; ++j) {
      auto s = e;
      s[j] = 1;
      probes.push_back(s);
    }
  }
  for (std::size_t g = 0; g < v.group().order(); ++g) {
    const Matrix& m = v.image(g);
    for (const auto& p : probes) {
      std::vector<Elem> gp(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (m(i, j) && p[j]) gp[i] = f.add(gp[i], f.mul(m(i, j), p[j]));
      if (eval_q(upper, gp) != eval_q(upper, p)) return false;
    }
  }
  return true;
}

namespace {

struct SpanSearch {
  std::optional<Matrix> found;
  std::string_view search = "basis";
  bool complete = true;
};

// Basis elements first, then every combination when the span has at most
// 4096 elements, else 500 seeded random combinations.
template <class Pred>
SpanSearch search_span(const std::vector<Matrix>& space, const Pred& pred, std::uint64_t seed) {
  SpanSearch out;
  for (const auto& q : space)
    if (pred(q)) {
      out.found = q;
      return out;
    }
  if (space.size() < 2) return out;
  const Field& f = space[0].field();
  constexpr std::uint64_t kExhaustiveLimit = 4096;
  constexpr int kSamples = 500;
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < space.size() && small; ++i) {
    total *= f.order();
    if (total > kExhaustiveLimit) small = false;
  }
  auto combo = [&](const std::vector<Elem>& c) {
    Matrix q(f, space[0].rows(), space[0].cols());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) q += space[i].scaled(c[i]);
    return q;
  };
  std::vector<Elem> c(space.size(), 0);
  if (small) {
    out.search = "exhaustive";
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t r = code;
      for (auto& e : c) {
        e = static_cast<Elem>(r % f.order());
        r /= f.order();
      }
      Matrix q = combo(c);
      if (pred(q)) {
        out.found = std::move(q);
        return out;
      }
    }
    return out;
  }
  out.search = "sampled";
  out.complete = false;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kSamples; ++t) {
    for (auto& e : c) e = static_cast<Elem>(rng() % f.order());
    Matrix q = combo(c);
    if (pred(q)) {
      out.found = std::move(q);
      return out;
    }
  }
  return out;
}

}  // namespace

QuadraticTypeResult quadratic_type(const Rep& v, std::uint64_t seed) {
  const Field& f = v.field();
  require_char2(f);
  QuadraticTypeResult out;
  if (v.dim() == 0) {
    out.verdict = QuadraticVerdict::yes;
    out.witness = Matrix(f, 0, 0);
    return out;
  }
  const auto space = invariant_quadratic_space(v);
  out.space_dim = space.size();
  auto found = search_span(space, [](const Matrix& q) { return is_nondegenerate_quadratic(q); }, seed);
  out.search = found.search;
  if (found.found) {
    out.verdict = QuadraticVerdict::yes;
    out.witness = std::move(found.found);
  } else {
    out.verdict = found.complete ? QuadraticVerdict::no : QuadraticVerdict::probably_no;
  }
  return out;
}

std::vector<Matrix> invariant_alternating_space(const Rep& v) {
  const Field& f = v.field();
  const std::size_t d = v.dim();
  const auto space = invariant_bilinear_space(v);
  if (space.empty()) return {};
  // Coordinates c with sum c_k X_k alternating: X + X^T = 0 and zero diagonal.
  const std::size_t rows = d * d + d;
  Matrix cond(f, rows, space.size());
  for (std::size_t k = 0; k < space.size(); ++k) {
    const Matrix s = space[k] + space[k].transpose();
    for (std::size_t i = 0; i < d * d; ++i) cond(i, k) = s.data()[i];
    for (std::size_t i = 0; i < d; ++i) cond(d * d + i, k) = space[k](i, i);
  }
  const Matrix ker = nullspace(cond);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix x(f, d, d);
    for (std::size_t k = 0; k < space.size(); ++k)
      if (ker(k, c)) x += space[k].scaled(ker(k, c));
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Matrix> nondegenerate_alternating_form(const Rep& v, std::uint64_t seed) {
  if (v.dim() == 0) return Matrix(v.field(), 0, 0);
  const auto space = invariant_alternating_space(v);
  return search_span(space, [](const Matrix& x) { return rank(x) == x.rows(); }, seed).found;
}

}  // namespace morita
