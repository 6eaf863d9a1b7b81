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

#pragma once

#include <vector>

#include "morita/field.hpp"
#include "morita/group.hpp"
#include "morita/matrix.hpp"
#include "morita/rep.hpp"

namespace morita {

/// Element sum_x c_x x of kG, coefficients in enumeration order.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  GroupAlgebraElement(Group g, Field f);
  GroupAlgebraElement(Group g, Field f, std::vector<Elem> coeffs);

  static GroupAlgebraElement one(const Group& g, const Field& f);
  static GroupAlgebraElement basis(const Group& g, const Field& f, std::size_t x);
  /// (1/|S|) sum_{s in S}; |S| must be invertible in f.
  static GroupAlgebraElement average(const Group& g, const Field& f, const std::vector<std::size_t>& members);

  const Group& group() const { return group_; }
  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem operator[](std::size_t x) const { return c_[x]; }
  bool is_zero() const;
  /// Sum of coefficients.
  Elem augmentation() const;
  /// Commutes with every generator.
  bool is_central() const;

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  /// Convolution product, |G|^2 terms.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  GroupAlgebraElement scaled(Elem a) const;

  /// Matrix of u -> this * u on the element basis of kG.
  Matrix left_multiplication() const;
  /// sum_x c_x rho(x).
  Matrix act(const Rep& v) const;

 private:
  Group group_;
  Field field_;
  std::vector<Elem> c_;
};

}  // namespace morita
