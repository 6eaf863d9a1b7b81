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

#include "morita/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "morita/poly.hpp"

namespace morita {

std::vector<CentralElement> class_sums(const Group& g, const Field& f) {
  std::vector<CentralElement> out;
  for (const auto& c : g.classes()) {
    std::vector<Elem> coeffs(g.order(), 0);
    for (auto x : c.members) coeffs[x] = 1;
    out.emplace_back(g, f, std::move(coeffs));
  }
  return out;
}

std::map<std::size_t, Elem> to_class_coefficients(const CentralElement& z) {
  const Group& g = z.group();
  std::map<std::size_t, Elem> out;
  const auto& classes = g.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Elem c = z[classes[k].representative];
    for (auto x : classes[k].members)
      if (z[x] != c) fail(ErrorCode::RelationViolation, "element is not constant on conjugacy classes");
    if (c) out.emplace(k, c);
  }
  return out;
}

namespace {

using Vec = std::vector<Elem>;

// The center in class-sum coordinates with its structure constants.
class Center {
 public:
  Center(const Group& g, const Field& f) : g_(g), f_(f), r_(g.classes().size()) {
    const auto sums = class_sums(g, f);
    table_.resize(r_ * r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = i; j < r_; ++j) {
        table_[i * r_ + j] = coords(sums[i] * sums[j]);
        table_[j * r_ + i] = table_[i * r_ + j];
      }
  }

  std::size_t dim() const { return r_; }
  const Field& field() const { return f_; }

  Vec coords(const GroupAlgebraElement& z) const {
    Vec out(r_);
    for (std::size_t k = 0; k < r_; ++k) out[k] = z[g_.classes()[k].representative];
    return out;
  }

  GroupAlgebraElement element(const Vec& z) const {
    std::vector<Elem> c(g_.order());
    for (std::size_t x = 0; x < g_.order(); ++x) c[x] = z[g_.class_of(x)];
    return GroupAlgebraElement(g_, f_, std::move(c));
  }

  Vec unit() const {
    Vec out(r_, 0);
    out[g_.class_of(0)] = 1;
    return out;
  }

  Vec basis(std::size_t i) const {
    Vec out(r_, 0);
    out[i] = 1;
    return out;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < r_; ++j) {
        if (!b[j]) continue;
        f_.axpy(out, f_.mul(a[i], b[j]), table_[i * r_ + j]);
      }
    }
    return out;
  }

  // Minimal polynomial of c inside the algebra with identity `one`.
  Poly minpoly(const Vec& c, const Vec& one) const {
    std::vector<Vec> powers{one};
    SpanBuilder span(f_, r_);
    span.add(one);
    for (;;) {
      Vec next = mul(powers.back(), c);
      if (!span.contains(next)) {
        span.add(next);
        powers.push_back(std::move(next));
        continue;
      }
      Matrix a(f_, r_, powers.size());
      for (std::size_t j = 0; j < powers.size(); ++j)
        for (std::size_t i = 0; i < r_; ++i) a(i, j) = powers[j][i];
      const Matrix x = *solve(a, Matrix::column(f_, next));
      std::vector<Elem> coeffs(powers.size() + 1);
      for (std::size_t j = 0; j < powers.size(); ++j) coeffs[j] = f_.neg(x(j, 0));
      coeffs.back() = 1;
      return Poly(f_, std::move(coeffs));
    }
  }

  // u(c) with c^0 = one.
  Vec evaluate(const Poly& u, const Vec& c, const Vec& one) const {
    Vec acc(r_, 0);
    for (std::size_t k = u.coeffs().size(); k-- > 0;) {
      acc = mul(acc, c);
      f_.axpy(acc, u.coeffs()[k], one);
    }
    return acc;
  }

 private:
  Group g_;
  Field f_;
  std::size_t r_;
  std::vector<Vec> table_;
};

struct SplitOutcome {
  std::vector<Vec> idempotents;
  // lcm of residue degrees that did not split; 1 when fully split.
  std::uint32_t residue_degree = 1;
};

SplitOutcome split_center(const Center& z) {
  SplitOutcome out;
  std::vector<Vec> todo{z.unit()};
  while (!todo.empty()) {
    Vec eps = std::move(todo.back());
    todo.pop_back();
    bool split = false;
    std::uint32_t residue = 1;
    for (std::size_t i = 0; i < z.dim() && !split; ++i) {
      const Vec c = z.mul(z.basis(i), eps);
      const Poly mu = z.minpoly(c, eps);
      const Factorization fac = factor(mu);
      if (fac.factors.size() == 1) {
        const auto d = static_cast<std::uint32_t>(fac.factors[0].first.degree());
        residue = std::lcm(residue, d);
        continue;
      }
      for (const auto& [pf, m] : fac.factors) {
        Poly pm = Poly::constant(z.field(), 1);
        for (int k = 0; k < m; ++k) pm = pm * pf;
        const Poly rest = mu / pm;
        const ExtendedGcd eg = xgcd(rest, pm);
        const Poly u = (eg.s * rest) % mu;
        todo.push_back(z.evaluate(u, c, eps));
      }
      split = true;
    }
    if (!split) {
      out.idempotents.push_back(std::move(eps));
      out.residue_degree = std::lcm(out.residue_degree, residue);
    }
  }
  return out;
}

BlockDecomposition assemble(const Center& z, const std::vector<Vec>& idems) {
  BlockDecomposition dec;
  dec.field = z.field();
  for (const auto& e : idems) dec.idempotents.push_back(z.element(e));
  // Deterministic order: by class coordinates.
  std::sort(dec.idempotents.begin(), dec.idempotents.end(),
            [](const CentralElement& a, const CentralElement& b) { return a.coeffs() < b.coeffs(); });
  bool found = false;
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i)
    if (dec.idempotents[i].augmentation() == 1) {
      dec.principal_index = i;
      found = true;
    }
  if (!found) fail(ErrorCode::RelationViolation, "no block idempotent acts as 1 on the trivial module");
  return dec;
}

}  // namespace

BlockDecomposition central_primitive_idempotents(const Group& g, const Field& f) {
  const Center z(g, f);
  const SplitOutcome s = split_center(z);
  if (s.residue_degree > 1)
    fail(ErrorCode::SplitIncomplete, "center does not split over " + f.literal() + "; extend by degree " +
                                         std::to_string(s.residue_degree));
  return assemble(z, s.idempotents);
}

BlockDecomposition central_primitive_idempotents_split(const Group& g, const Field& f) {
  Field cur = f;
  for (int round = 0; round < 4; ++round) {
    const Center z(g, cur);
    const SplitOutcome s = split_center(z);
    if (s.residue_degree == 1) return assemble(z, s.idempotents);
    cur = Field::make(cur.characteristic(), cur.degree() * s.residue_degree);
  }
  fail(ErrorCode::SplitIncomplete, "center did not split after repeated extension");
}

std::size_t block_of_module(const Rep& v, const BlockDecomposition& dec) {
  const Rep w = v.field() == dec.field ? v : extend_scalars(v, dec.field);
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    const Matrix a = dec.idempotents[i].act(w);
    if (a.is_zero()) continue;
    if (!a.is_identity()) fail(ErrorCode::NotBlockHomogeneous, "module is not block-homogeneous");
    if (found) fail(ErrorCode::NotBlockHomogeneous, "module meets several blocks");
    found = i;
  }
  if (!found) fail(ErrorCode::NotBlockHomogeneous, "no block idempotent acts as the identity");
  return *found;
}

CentralElement principal_block_idempotent_psolvable(const Group& g, std::uint32_t p, const Field& f) {
  return GroupAlgebraElement::average(g, f, o_p_prime(g, p).members);
}

Rep block_module(const CentralElement& e) {
  const Rep reg = regular_rep(e.group(), e.field());
  return submodule_rep(reg, column_basis(e.left_multiplication()));
}

CentralElement extend_element(const CentralElement& z, const Field& target) {
  std::vector<Elem> c(z.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = embed(z.field(), z[i], target);
  return CentralElement(z.group(), target, std::move(c));
}

std::optional<CentralElement> restrict_element(const CentralElement& z, const Field& subfield) {
  std::map<Elem, Elem> back;
  for (Elem a = 0; a < subfield.order(); ++a) back.emplace(embed(subfield, a, z.field()), a);
  std::vector<Elem> c(z.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto it = back.find(z[i]);
    if (it == back.end()) return std::nullopt;
    c[i] = it->second;
  }
  return CentralElement(z.group(), subfield, std::move(c));
}

}  // namespace morita
