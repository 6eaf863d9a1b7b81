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

#include "morita/poly.hpp"

#include <algorithm>
#include <random>

namespace morita {

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Field f, std::size_t degree, Elem c) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::constant(Field f, Elem c) { return Poly(f, {c}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Poly::eval(Elem at) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Elem a) const {
  std::vector<Elem> out(c_);
  field_.scale(out, a);
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]);
  return Poly(field_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_, "poly add");
  std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_, "poly sub");
  std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_, "poly mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    a.field_.axpy(std::span<Elem>(out).subspan(i, b.c_.size()), a.c_[i], b.c_);
  return Poly(a.field_, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly divmod");
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem inv_lead = f.inv(b.lead());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem c = f.mul(rem[k], inv_lead);
    if (c == 0) continue;
    quot[k - db] = c;
    f.axpy(std::span<Elem>(rem).subspan(k - db, db + 1), f.neg(c), bc);
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = field_.format(c_[i]);
    if (!field_.is_prime_field() && c.find('x') != std::string::npos) c = "(" + c + ")";
    if (i == 0 || c_[i] != 1) out += c;
    if (i >= 1) out += "T";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

Poly frobenius_power(const Poly& base, std::uint32_t k, const Poly& mod) {
  Poly out = base % mod;
  for (std::uint32_t i = 0; i < k; ++i) out = powmod(out, base.field().order(), mod);
  return out;
}

Poly Factorization::product() const {
  Poly out = Poly::constant(field, unit);
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) out = out * g;
  return out;
}

namespace {

// c(T) = sum a_{pk} T^{pk}  ->  sum a_{pk}^{1/p} T^k
Poly pth_root_poly(const Poly& c) {
  const Field& f = c.field();
  const std::uint32_t p = f.characteristic();
  std::vector<Elem> out(c.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) out[i / p] = f.pth_root(c.coeffs()[i]);
  return Poly(f, std::move(out));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  const Field& fld = f.field();
  const Poly one = Poly::constant(fld, 1);
  const Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root_poly(f), mult * static_cast<int>(fld.characteristic()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!(w == one)) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), mult * i);
    ++i;
    w = y;
    c = c / y;
  }
  if (!(c == one) && c.degree() > 0)
    squarefree(pth_root_poly(c), mult * static_cast<int>(fld.characteristic()), out);
}

Poly random_poly(const Field& f, long degree_below, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(degree_below));
  for (auto& v : c) v = static_cast<Elem>(rng() % f.order());
  return Poly(f, std::move(c));
}

void equal_degree(const Poly& g, long d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& f = g.field();
  const std::uint32_t q = f.order();
  for (;;) {
    Poly a = random_poly(f, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b;
    if (q % 2 == 1) {
      Poly t = a % g;
      Poly prod = t;
      for (long i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        prod = (prod * t) % g;
      }
      b = powmod(prod, (q - 1) / 2, g) - Poly::constant(f, 1);
    } else {
      const long steps = static_cast<long>(f.degree()) * d;
      Poly t = a % g;
      b = t;
      for (long i = 1; i < steps; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    }
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization result;
  result.field = f.field();
  result.unit = f.lead();
  const Poly g = f.monic();
  if (g.degree() == 0) return result;
  const Field& fld = f.field();
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(g, 1, sqf);
  std::mt19937_64 rng(seed);
  const Poly x = Poly::x(fld);
  for (const auto& [s, mult] : sqf) {
    Poly rest = s;
    Poly h = x % rest;
    for (long i = 1; rest.degree() >= 2 * i; ++i) {
      h = powmod(h, fld.order(), rest);
      Poly part = gcd(rest, h - x);
      if (part.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(part, i, rng, pieces);
        for (auto& pc : pieces) result.factors.emplace_back(std::move(pc), mult);
        rest = rest / part;
        h = h % rest;
      }
    }
    if (rest.degree() > 0) result.factors.emplace_back(rest.monic(), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& fm : result.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(std::move(fm));
  }
  result.factors = std::move(merged);
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  Poly h = x % g;
  for (long i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(h, f.field().order(), g);
    if (gcd(g, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<Elem> roots(const Poly& f) {
  std::vector<Elem> out;
  for (const auto& [g, m] : factor(f).factors)
    if (g.degree() == 1) out.push_back(f.field().neg(g.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace morita
