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

#include "morita/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

namespace morita {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x]) fail(ErrorCode::ParseError, "permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> v(degree);
  std::iota(v.begin(), v.end(), 0u);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::ParseError, "cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorCode::ParseError, "cycle notation: bad token in \"" + std::string(text) + "\"");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v >= degree) fail(ErrorCode::ParseError, "cycle notation: point " + std::to_string(v) + " out of range");
      if (used[v]) fail(ErrorCode::ParseError, "cycle notation: point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  Perm out = identity(img_.size());
  for (std::uint32_t x = 0; x < img_.size(); ++x) out.img_[img_[x]] = x;
  return out;
}

bool Perm::is_identity() const {
  for (std::uint32_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::padded(std::size_t offset, std::size_t degree) const {
  if (offset + img_.size() > degree) fail(ErrorCode::ShapeMismatch, "padding to a smaller degree");
  Perm out = identity(degree);
  for (std::size_t x = 0; x < img_.size(); ++x) out.img_[offset + x] = static_cast<std::uint32_t>(offset + img_[x]);
  return out;
}

std::string Perm::to_string() const {
  std::string out;
  std::vector<bool> done(img_.size(), false);
  for (std::uint32_t x = 0; x < img_.size(); ++x) {
    if (done[x] || img_[x] == x) continue;
    out += "(";
    std::uint32_t y = x;
    bool first = true;
    while (!done[y]) {
      if (!first) out += " ";
      out += std::to_string(y);
      done[y] = true;
      first = false;
      y = img_[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(ErrorCode::ShapeMismatch, "composing permutations of different degree");
  Perm out;
  out.img_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) out.img_[x] = a.img_[b.img_[x]];
  return out;
}

bool Subgroup::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

struct GroupData {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;
  std::vector<std::vector<std::uint32_t>> words;
  std::vector<std::size_t> parent;
  std::vector<std::uint32_t> parent_gen;
  std::vector<std::size_t> gen_index;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, VecHash> index;
  std::vector<std::uint32_t> table;  // order^2 when small
  std::vector<std::size_t> inverse;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;

  std::size_t lookup(const Perm& p) const {
    auto it = index.find(p.images());
    if (it == index.end()) fail(ErrorCode::RelationViolation, "product left the enumerated group");
    return it->second;
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    if (!table.empty()) return table[a * elements.size() + b];
    return lookup(elements[a] * elements[b]);
  }
};

}  // namespace detail

namespace {

constexpr std::size_t kTableLimit = 1500;

}  // namespace

Group Group::from_generators(std::size_t degree, std::vector<Perm> generators, std::size_t order_bound) {
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  for (const auto& g : generators)
    if (g.degree() != degree) fail(ErrorCode::ShapeMismatch, "generator degree differs from group degree");
  d->gens = std::move(generators);
  const Perm id = Perm::identity(degree);
  d->elements.push_back(id);
  d->words.emplace_back();
  d->parent.push_back(0);
  d->parent_gen.push_back(0);
  d->index.emplace(id.images(), 0);
  for (std::size_t i = 0; i < d->elements.size(); ++i) {
    for (std::uint32_t j = 0; j < d->gens.size(); ++j) {
      Perm next = d->elements[i] * d->gens[j];
      if (d->index.count(next.images())) continue;
      if (d->elements.size() >= order_bound)
        fail(ErrorCode::OrderBoundExceeded, "group order exceeds bound " + std::to_string(order_bound));
      d->index.emplace(next.images(), d->elements.size());
      auto w = d->words[i];
      w.push_back(j);
      d->words.push_back(std::move(w));
      d->parent.push_back(i);
      d->parent_gen.push_back(j);
      d->elements.push_back(std::move(next));
    }
  }
  const std::size_t n = d->elements.size();
  for (const auto& g : d->gens) d->gen_index.push_back(d->lookup(g));
  if (n <= kTableLimit) {
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d->table[a * n + b] = static_cast<std::uint32_t>(d->lookup(d->elements[a] * d->elements[b]));
  }
  d->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) d->inverse[a] = d->lookup(d->elements[a].inverse());

  // Conjugacy classes: orbits under conjugation by the generators.
  d->class_of.assign(n, n);
  std::vector<std::size_t> gen_inv;
  for (auto gi : d->gen_index) gen_inv.push_back(d->inverse[gi]);
  for (std::size_t x = 0; x < n; ++x) {
    if (d->class_of[x] != n) continue;
    const std::size_t c = d->classes.size();
    ConjugacyClass cls{x, {x}};
    d->class_of[x] = c;
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      for (std::size_t j = 0; j < gen_inv.size(); ++j) {
        const std::size_t y = d->mul(d->mul(d->gen_index[j], cls.members[k]), gen_inv[j]);
        if (d->class_of[y] == n) {
          d->class_of[y] = c;
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    d->classes.push_back(std::move(cls));
  }
  Group out;
  out.d_ = std::move(d);
  return out;
}

std::size_t Group::degree() const { return d_->degree; }
std::size_t Group::order() const { return d_->elements.size(); }
const std::vector<Perm>& Group::generators() const { return d_->gens; }
const Perm& Group::element(std::size_t i) const { return d_->elements.at(i); }
std::optional<std::size_t> Group::index_of(const Perm& g) const {
  auto it = d_->index.find(g.images());
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}
const std::vector<std::uint32_t>& Group::word(std::size_t i) const { return d_->words.at(i); }
std::size_t Group::parent(std::size_t i) const { return d_->parent.at(i); }
std::uint32_t Group::parent_generator(std::size_t i) const { return d_->parent_gen.at(i); }
std::size_t Group::generator_index(std::size_t j) const { return d_->gen_index.at(j); }
std::size_t Group::mul(std::size_t a, std::size_t b) const { return d_->mul(a, b); }
std::size_t Group::inv(std::size_t a) const { return d_->inverse[a]; }
const std::vector<ConjugacyClass>& Group::classes() const { return d_->classes; }
std::size_t Group::class_of(std::size_t i) const { return d_->class_of.at(i); }
bool Group::is_abelian() const { return d_->classes.size() == d_->elements.size(); }

bool operator==(const Group& a, const Group& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->degree == b.d_->degree && a.d_->gens == b.d_->gens;
}

void require_same_group(const Group& a, const Group& b, std::string_view where) {
  if (!(a == b)) fail(ErrorCode::GroupMismatch, std::string(where) + ": groups differ");
}

Subgroup generated_subgroup(const Group& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (auto s : gens) {
      const std::size_t y = g.mul(members[k], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return {std::move(members)};
}

bool is_normal(const Group& g, const Subgroup& n) {
  for (auto x : n.members)
    for (std::size_t j = 0; j < g.num_generators(); ++j)
      if (!n.contains(g.conjugate(x, g.generator_index(j)))) return false;
  return true;
}

Group subgroup_group(const Group& g, const Subgroup& s) {
  // Greedy generating set: add members until they generate s.
  std::vector<std::size_t> gens;
  Subgroup cur{{0}};
  for (auto x : s.members) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generated_subgroup(g, gens);
    if (cur.order() == s.order()) break;
  }
  std::vector<Perm> perms;
  for (auto x : gens) perms.push_back(g.element(x));
  return Group::from_generators(g.degree(), std::move(perms));
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  constexpr std::size_t kGuard = 2000;
  if (g.order() > kGuard) fail(ErrorCode::GuardExceeded, "normal_subgroups needs |G| <= 2000");
  // Every normal subgroup is generated by the classes it contains, so the
  // lattice is reached from {1} by repeatedly adjoining one class.
  const auto& classes = g.classes();
  std::vector<Subgroup> found{Subgroup{{0}}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& cls : classes) {
      if (found[k].contains(cls.representative)) continue;
      std::vector<std::size_t> gens = found[k].members;
      gens.push_back(cls.representative);
      for (auto m : cls.members) gens.push_back(m);
      Subgroup s = generated_subgroup(g, gens);
      if (std::find_if(found.begin(), found.end(), [&](const Subgroup& t) { return t.members == s.members; }) ==
          found.end())
        found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return found;
}

namespace {

bool is_p_power(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup o_p_prime(const Group& g, std::uint32_t p) {
  Subgroup best{{0}};
  for (auto& n : normal_subgroups(g))
    if (n.order() % p != 0 && n.order() > best.order()) best = n;
  return best;
}

Subgroup o_p(const Group& g, std::uint32_t p) {
  Subgroup best{{0}};
  for (auto& n : normal_subgroups(g))
    if (is_p_power(n.order(), p) && n.order() > best.order()) best = n;
  return best;
}

GroupHom::GroupHom(Group source, Group target, std::vector<std::size_t> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_.num_generators())
    fail(ErrorCode::ShapeMismatch, "homomorphism needs one image per source generator");
  const std::size_t n = source_.order();
  map_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i)
    map_[i] = target_.mul(map_[source_.parent(i)], images.at(source_.parent_generator(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < source_.num_generators(); ++j)
      if (map_[source_.mul(i, source_.generator_index(j))] != target_.mul(map_[i], images[j]))
        fail(ErrorCode::RelationViolation, "generator images do not extend to a homomorphism");
}

std::vector<std::size_t> GroupHom::kernel() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] == 0) out.push_back(i);
  return out;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target_.order(), false);
  for (auto t : map_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Quotient quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t none = g.order();
  std::vector<std::size_t> coset_of(g.order(), none);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != none) continue;
    for (auto m : n.members) coset_of[g.mul(x, m)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t k = reps.size();
  auto action = [&](std::size_t s) {
    std::vector<std::uint32_t> img(k);
    for (std::size_t c = 0; c < k; ++c) img[c] = static_cast<std::uint32_t>(coset_of[g.mul(s, reps[c])]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (std::size_t j = 0; j < g.num_generators(); ++j) gens.push_back(action(g.generator_index(j)));
  Group h = Group::from_generators(k, gens);
  std::vector<std::size_t> images;
  for (const auto& p : gens) images.push_back(*h.index_of(p));
  GroupHom proj(g, h, std::move(images));
  return Quotient{std::move(h), std::move(proj), std::move(coset_of), std::move(reps)};
}

DirectProduct direct_product(const Group& h, const Group& g) {
  const std::size_t deg = h.degree() + g.degree();
  std::vector<Perm> gens;
  for (const auto& p : h.generators()) gens.push_back(p.padded(0, deg));
  for (const auto& p : g.generators()) gens.push_back(p.padded(h.degree(), deg));
  DirectProduct out{Group::from_generators(deg, std::move(gens), Group::kDefaultOrderBound), {}, {}};
  for (std::size_t i = 0; i < h.order(); ++i) out.embed_left.push_back(*out.group.index_of(h.element(i).padded(0, deg)));
  for (std::size_t i = 0; i < g.order(); ++i)
    out.embed_right.push_back(*out.group.index_of(g.element(i).padded(h.degree(), deg)));
  return out;
}

bool is_p_solvable(const Group& g, std::uint32_t p) {
  if (g.order() == 1) return true;
  Subgroup n = o_p_prime(g, p);
  if (n.order() == 1) n = o_p(g, p);
  if (n.order() == 1) return false;
  if (n.order() == g.order()) return true;
  return is_p_solvable(quotient_group(g, n).group, p);
}

}  // namespace morita
