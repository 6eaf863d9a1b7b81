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

#include "morita/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "morita/poly.hpp"

namespace morita {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<Key, std::unique_ptr<detail::FieldData>>& registry() {
  static std::map<Key, std::unique_ptr<detail::FieldData>> r;
  return r;
}

std::vector<std::uint32_t> digits_of(Elem a, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

// Schoolbook product modulo the (monic) modulus; only used to build tables.
Elem slow_mul(const detail::FieldData& f, Elem a, Elem b) {
  const auto da = digits_of(a, f.p, f.n);
  const auto db = digits_of(b, f.p, f.n);
  std::vector<std::uint64_t> prod(2 * f.n - 1, 0);
  for (std::uint32_t i = 0; i < f.n; ++i)
    for (std::uint32_t j = 0; j < f.n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
  for (std::size_t k = prod.size(); k-- > f.n;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < f.n; ++i)
      prod[k - f.n + i] = (prod[k - f.n + i] + (f.p - c) * f.modulus[i]) % f.p;
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < f.n; ++i) out += static_cast<Elem>(prod[i]) * f.powers[i];
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Elem slow_pow(const detail::FieldData& f, Elem a, std::uint64_t e) {
  Elem r = 1;
  while (e) {
    if (e & 1) r = slow_mul(f, r, a);
    a = slow_mul(f, a, a);
    e >>= 1;
  }
  return r;
}

std::unique_ptr<detail::FieldData> build(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus) {
  auto d = std::make_unique<detail::FieldData>();
  d->p = p;
  d->n = n;
  d->modulus = std::move(modulus);
  d->q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    d->powers.push_back(d->q);
    d->q *= p;
  }
  const std::uint32_t q = d->q;
  d->neg_table.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Elem out = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t c = (a / d->powers[i]) % p;
      out += ((p - c) % p) * d->powers[i];
    }
    d->neg_table[a] = out;
  }
  if (n > 1 && q <= 256) {
    d->add_table.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        Elem out = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
          const std::uint32_t s = (a / d->powers[i] + b / d->powers[i]) % p;
          out += s * d->powers[i];
        }
        d->add_table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(out);
      }
  }
  // Multiplicative group: locate a primitive element, then tabulate.
  const std::uint64_t group_order = q - 1;
  Elem g = 1;
  if (q > 2) {
    const auto divisors = prime_divisors(group_order);
    bool found = false;
    for (Elem cand = 2; cand < q && !found; ++cand) {
      if (slow_pow(*d, cand, group_order) != 1) fail(ErrorCode::ReducibleModulus, "modulus has zero divisors");
      found = std::all_of(divisors.begin(), divisors.end(),
                          [&](std::uint64_t r) { return slow_pow(*d, cand, group_order / r) != 1; });
      if (found) g = cand;
    }
    if (!found) fail(ErrorCode::ReducibleModulus, "no primitive element found");
  }
  d->exp_table.resize(2 * group_order);
  d->log_table.assign(q, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    d->exp_table[i] = cur;
    d->exp_table[i + group_order] = cur;
    d->log_table[cur] = static_cast<std::uint32_t>(i);
    cur = slow_mul(*d, cur, g);
  }
  return d;
}

const detail::FieldData* intern(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& modulus) {
  std::lock_guard lock(registry_mutex());
  auto& reg = registry();
  Key key{p, n, modulus};
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto data = build(p, n, modulus);
  const auto* raw = data.get();
  reg.emplace(std::move(key), std::move(data));
  return raw;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t n, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::GuardExceeded, "field order exceeds 65536");
  }
  if (modulus) {
    auto& m = *modulus;
    if (m.size() != n + 1) fail(ErrorCode::DegreeMismatch, "modulus degree does not match n");
    for (auto& c : m) c %= p;
    if (m.back() != 1) fail(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (n > 1) {
      const Field prime = make(p, 1);
      if (!is_irreducible(Poly(prime, std::vector<Elem>(m.begin(), m.end()))))
        fail(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    return Field(intern(p, n, m));
  }
  if (n == 1) return Field(intern(p, 1, {0, 1}));
  const Field prime = make(p, 1);
  // Counter over (c_0, ..., c_{n-1}) with c_{n-1} varying fastest gives
  // lexicographic order comparing c_0 first.
  std::vector<std::uint32_t> c(n, 0);
  for (std::uint64_t iter = 0; iter < q; ++iter) {
    std::vector<Elem> coeffs(c.begin(), c.end());
    coeffs.push_back(1);
    if (is_irreducible(Poly(prime, coeffs))) {
      std::vector<std::uint32_t> m(coeffs.begin(), coeffs.end());
      return Field(intern(p, n, m));
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
  fail(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

Field Field::parse(std::string_view literal) {
  const std::string s = trim(literal);
  if (s.size() < 5 || s.rfind("gf(", 0) != 0 || s.back() != ')')
    fail(ErrorCode::ParseError, "bad field literal '" + std::string(literal) + "'");
  std::string body = s.substr(3, s.size() - 4);
  std::string modulus_part;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    modulus_part = body.substr(semi + 1);
    body = body.substr(0, semi);
  }
  std::uint32_t p = 0, n = 1;
  try {
    if (auto caret = body.find('^'); caret != std::string::npos) {
      p = static_cast<std::uint32_t>(std::stoul(body.substr(0, caret)));
      n = static_cast<std::uint32_t>(std::stoul(body.substr(caret + 1)));
    } else {
      p = static_cast<std::uint32_t>(std::stoul(body));
    }
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad field literal '" + std::string(literal) + "'");
  }
  if (modulus_part.empty()) return make(p, n);
  if (modulus_part.rfind("modulus=", 0) != 0) fail(ErrorCode::ParseError, "expected modulus=...");
  std::vector<std::uint32_t> m;
  std::stringstream ss(modulus_part.substr(8));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      m.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad modulus coefficient '" + item + "'");
    }
  }
  return make(p, n, m);
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t m = d_->q - 1;
  return d_->exp_table[(m - d_->log_table[a]) % m];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t m = d_->q - 1;
  return d_->exp_table[(static_cast<std::uint64_t>(d_->log_table[a]) * (e % m)) % m];
}

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = d_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::pth_root(Elem a) const { return pow(a, d_->q / d_->p); }

Elem Field::generator() const {
  if (d_->n > 1) return d_->p;
  return neg(d_->modulus[0]);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return digits_of(a, d_->p, d_->n); }

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > d_->n) fail(ErrorCode::ShapeMismatch, "too many coefficients");
  Elem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) out += (c[i] % d_->p) * d_->powers[i];
  return out;
}

std::string Field::format(Elem a) const {
  if (a == 0) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Elem Field::parse_element(std::string_view text) const {
  const std::string s = trim(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty field element");
  const Elem x = generator();
  Elem total = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') negative = !negative;
      ++i;
    }
    std::int64_t coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coef = std::stoll(s.substr(start, i - start));
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::uint64_t exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
        exponent = std::stoull(s.substr(start, i - start));
      }
    } else if (!have_coef) {
      fail(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
    }
    Elem term = mul(from_int(coef), pow(x, exponent));
    if (negative) term = neg(term);
    total = add(total, term);
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      fail(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
  }
  return total;
}

std::string Field::literal() const {
  std::string out = "gf(" + std::to_string(d_->p) + "^" + std::to_string(d_->n) + "; modulus=";
  for (std::size_t i = 0; i < d_->modulus.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d_->modulus[i]);
  }
  return out + ")";
}

void Field::axpy(std::span<Elem> y, Elem a, std::span<const Elem> x) const {
  if (a == 0) return;
  const std::size_t len = std::min(y.size(), x.size());
  const auto& d = *d_;
  if (d.n == 1) {
    const std::uint64_t p = d.p;
    for (std::size_t j = 0; j < len; ++j) y[j] = static_cast<Elem>((y[j] + static_cast<std::uint64_t>(a) * x[j]) % p);
    return;
  }
  const std::uint32_t la = d.log_table[a];
  for (std::size_t j = 0; j < len; ++j) {
    if (x[j] == 0) continue;
    y[j] = d.add(y[j], d.exp_table[la + d.log_table[x[j]]]);
  }
}

void Field::scale(std::span<Elem> y, Elem a) const {
  for (auto& v : y) v = mul(v, a);
}

void require_same_field(const Field& a, const Field& b, std::string_view where) {
  if (!(a == b)) fail(ErrorCode::FieldMismatch, std::string(where) + ": operands over different fields");
}

FieldElement::FieldElement(Field f, Elem v) : field_(f), value_(v) {
  if (!f.valid() || v >= f.order()) fail(ErrorCode::ShapeMismatch, "element code out of range");
}

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "add");
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "sub");
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "mul");
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "div");
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }

namespace {

std::mutex& embed_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<const void*, const void*>, std::vector<Elem>>& embed_cache() {
  static std::map<std::pair<const void*, const void*>, std::vector<Elem>> c;
  return c;
}

}  // namespace

Elem embed(const Field& source, Elem a, const Field& target) {
  if (source == target) return a;
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0)
    fail(ErrorCode::NotASubfield, "GF(" + std::to_string(source.order()) + ") does not embed in GF(" +
                                      std::to_string(target.order()) + ")");
  const std::pair<const void*, const void*> key{&source.data(), &target.data()};
  {
    std::lock_guard lock(embed_mutex());
    auto it = embed_cache().find(key);
    if (it != embed_cache().end()) return it->second.at(a);
  }
  // Prime-field codes coincide in every extension, so the modulus can be
  // read directly as a polynomial over the target.
  std::vector<Elem> mod(source.modulus().begin(), source.modulus().end());
  const auto rs = roots(Poly(target, mod));
  if (rs.empty()) fail(ErrorCode::NotASubfield, "source modulus has no root in target");
  const Elem r = rs.front();
  std::vector<Elem> table(source.order());
  for (Elem e = 0; e < source.order(); ++e) {
    const auto c = source.coeffs(e);
    Elem acc = 0;
    Elem rp = 1;
    for (std::uint32_t ci : c) {
      acc = target.add(acc, target.mul(ci, rp));
      rp = target.mul(rp, r);
    }
    table[e] = acc;
  }
  std::lock_guard lock(embed_mutex());
  auto& slot = embed_cache()[key];
  slot = std::move(table);
  return slot.at(a);
}

FieldElement fq_embed(const FieldElement& a, const Field& target) {
  return {target, embed(a.field(), a.value(), target)};
}

}  // namespace morita
