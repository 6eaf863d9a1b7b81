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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morita/error.hpp"

namespace morita {

/// A field element is stored as its polynomial-basis code: the element
/// c_0 + c_1 x + ... + c_{n-1} x^{n-1} has code sum c_i p^i.
using Elem = std::uint32_t;

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // low-to-high, monic, length n+1
  std::vector<std::uint32_t> powers;   // p^i for i < n
  std::vector<std::uint16_t> add_table;  // q*q, present when q <= 256
  std::vector<Elem> neg_table;
  std::vector<Elem> exp_table;  // length 2(q-1), exp_table[i] = g^i
  std::vector<std::uint32_t> log_table;

  Elem add(Elem a, Elem b) const {
    if (n == 1) {
      const Elem s = a + b;
      return s >= p ? s - p : s;
    }
    if (!add_table.empty()) return add_table[static_cast<std::size_t>(a) * q + b];
    Elem out = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t da = (a / powers[i]) % p;
      const std::uint32_t db = (b / powers[i]) % p;
      out += ((da + db) % p) * powers[i];
    }
    return out;
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (n == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    return exp_table[log_table[a] + log_table[b]];
  }
};

}  // namespace detail

/// Handle to an interned GF(p^n) descriptor. Two handles compare equal
/// exactly when they were built from the same (p, n, modulus).
class Field {
 public:
  Field() = default;

  /// Builds GF(p^n). Without a modulus, the lexicographically smallest monic
  /// irreducible of degree n is used (coefficients compared low degree first).
  static Field make(std::uint32_t p, std::uint32_t n = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Parses "gf(p^n; modulus=c0,...,cn)", "gf(p^n)" or "gf(p)".
  static Field parse(std::string_view literal);

  bool valid() const { return d_ != nullptr; }
  std::uint32_t characteristic() const { return d_->p; }
  std::uint32_t degree() const { return d_->n; }
  std::uint32_t order() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  bool is_prime_field() const { return d_->n == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return d_->add(a, b); }
  Elem neg(Elem a) const { return d_->neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return d_->add(a, d_->neg_table[b]); }
  Elem mul(Elem a, Elem b) const { return d_->mul(a, b); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const;
  /// a -> a^p.
  Elem frobenius(Elem a) const { return pow(a, d_->p); }
  /// The unique b with b^p = a (fields are perfect).
  Elem pth_root(Elem a) const;
  /// The polynomial generator x of the basis.
  Elem generator() const;
  /// A generator of the multiplicative group.
  Elem primitive_element() const { return d_->q > 1 ? d_->exp_table[1] : 0; }

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  std::string format(Elem a) const;
  Elem parse_element(std::string_view text) const;
  std::string literal() const;

  /// y += a * x, elementwise.
  void axpy(std::span<Elem> y, Elem a, std::span<const Elem> x) const;
  void scale(std::span<Elem> y, Elem a) const;

  const detail::FieldData& data() const { return *d_; }

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_ = nullptr;
};

void require_same_field(const Field& a, const Field& b, std::string_view where);

/// Value-semantic scalar with checked arithmetic.
class FieldElement {
 public:
  FieldElement(Field f, Elem v);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const { return field_.format(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  Elem value_;
};

bool is_prime(std::uint64_t n);

/// Image of `a` under the canonical-root embedding GF(p^m) -> target, where
/// m divides the target degree. The root of the source modulus chosen is the
/// one with the smallest code; the embedding table is cached per pair.
Elem embed(const Field& source, Elem a, const Field& target);
FieldElement fq_embed(const FieldElement& a, const Field& target);

}  // namespace morita
