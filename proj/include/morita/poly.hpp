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
#include <string>
#include <utility>
#include <vector>

#include "morita/field.hpp"

namespace morita {

/// Univariate polynomial over a Field; coefficients low-to-high with no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly monomial(Field f, std::size_t degree, Elem c = 1);
  static Poly constant(Field f, Elem c);
  static Poly x(Field f) { return monomial(f, 1); }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem eval(Elem at) const;

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Elem a) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  /// Degree first, then coefficients low-to-high.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd xgcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
/// base^(q^k) mod `mod` by k repeated Frobenius powers.
Poly frobenius_power(const Poly& base, std::uint32_t k, const Poly& mod);

struct Factorization {
  Field field;
  Elem unit = 0;
  /// Monic irreducible factors with multiplicities, sorted by operator<.
  std::vector<std::pair<Poly, int>> factors;

  Poly product() const;
};

/// Squarefree, distinct-degree and equal-degree (Cantor-Zassenhaus)
/// factorization. The randomized step draws from a fixed-seed generator.
Factorization factor(const Poly& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);
bool is_irreducible(const Poly& f);
/// Distinct roots in increasing code order.
std::vector<Elem> roots(const Poly& f);

}  // namespace morita
