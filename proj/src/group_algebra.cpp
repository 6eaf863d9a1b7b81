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

#include "morita/group_algebra.hpp"

#include <algorithm>

namespace morita {

GroupAlgebraElement::GroupAlgebraElement(Group g, Field f) : group_(std::move(g)), field_(f), c_(group_.order(), 0) {}

GroupAlgebraElement::GroupAlgebraElement(Group g, Field f, std::vector<Elem> coeffs)
    : group_(std::move(g)), field_(f), c_(std::move(coeffs)) {
  if (c_.size() != group_.order()) fail(ErrorCode::ShapeMismatch, "group algebra element needs |G| coefficients");
}

GroupAlgebraElement GroupAlgebraElement::one(const Group& g, const Field& f) { return basis(g, f, 0); }

GroupAlgebraElement GroupAlgebraElement::basis(const Group& g, const Field& f, std::size_t x) {
  GroupAlgebraElement e(g, f);
  e.c_.at(x) = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::average(const Group& g, const Field& f, const std::vector<std::size_t>& members) {
  const Elem n = f.from_int(static_cast<std::int64_t>(members.size()));
  if (n == 0) fail(ErrorCode::DivisionByZero, "averaging over a set whose size is zero in the field");
  const Elem inv = f.inv(n);
  GroupAlgebraElement e(g, f);
  for (auto x : members) e.c_.at(x) = inv;
  return e;
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e == 0; });
}

Elem GroupAlgebraElement::augmentation() const {
  Elem s = 0;
  for (auto e : c_) s = field_.add(s, e);
  return s;
}

bool GroupAlgebraElement::is_central() const {
  for (std::size_t j = 0; j < group_.num_generators(); ++j) {
    const auto g = basis(group_, field_, group_.generator_index(j));
    if (!(g * *this == *this * g)) return false;
  }
  return true;
}

namespace {

void same_algebra(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a.group(), b.group(), "group algebra");
  require_same_field(a.field(), b.field(), "group algebra");
}

}  // namespace

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  same_algebra(a, b);
  GroupAlgebraElement out(a);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.field_.add(a.c_[i], b.c_[i]);
  return out;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  same_algebra(a, b);
  GroupAlgebraElement out(a);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.field_.sub(a.c_[i], b.c_[i]);
  return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  same_algebra(a, b);
  const Field& f = a.field_;
  const Group& g = a.group_;
  GroupAlgebraElement out(g, f);
  for (std::size_t x = 0; x < a.c_.size(); ++x) {
    if (!a.c_[x]) continue;
    for (std::size_t y = 0; y < b.c_.size(); ++y) {
      if (!b.c_[y]) continue;
      const std::size_t xy = g.mul(x, y);
      out.c_[xy] = f.add(out.c_[xy], f.mul(a.c_[x], b.c_[y]));
    }
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(Elem a) const {
  GroupAlgebraElement out(*this);
  field_.scale(out.c_, a);
  return out;
}

Matrix GroupAlgebraElement::left_multiplication() const {
  const std::size_t n = group_.order();
  Matrix m(field_, n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!c_[x]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = group_.mul(x, y);
      m(xy, y) = field_.add(m(xy, y), c_[x]);
    }
  }
  return m;
}

Matrix GroupAlgebraElement::act(const Rep& v) const {
  require_same_group(group_, v.group(), "group algebra action");
  require_same_field(field_, v.field(), "group algebra action");
  Matrix acc(field_, v.dim(), v.dim());
  for (std::size_t x = 0; x < c_.size(); ++x)
    if (c_[x]) acc += v.image(x).scaled(c_[x]);
  return acc;
}

}  // namespace morita
