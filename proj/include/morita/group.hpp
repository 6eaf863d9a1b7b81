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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morita/error.hpp"

namespace morita {

/// Permutation of {0..degree-1}. Composition is right-to-left:
/// (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Parses cycle notation such as "(0 1)(2 3 4)"; "()" is the identity.
  static Perm parse(std::string_view cycles, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }
  Perm inverse() const;
  bool is_identity() const;
  /// Extends to a larger degree by fixing the new points, after shifting
  /// the support up by `offset`.
  Perm padded(std::size_t offset, std::size_t degree) const;
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<std::uint32_t> img_;
};

struct ConjugacyClass {
  std::size_t representative;         // smallest element index in the class
  std::vector<std::size_t> members;   // increasing
};

/// A subset of a group's enumerated elements closed under products.
struct Subgroup {
  std::vector<std::size_t> members;  // increasing element indices
  std::size_t order() const { return members.size(); }
  bool contains(std::size_t i) const;
};

namespace detail {
struct GroupData;
}

/// A fully enumerated permutation group. Elements are numbered in
/// breadth-first discovery order from the identity (index 0): each
/// non-identity element is parent * generator for an earlier parent.
class Group {
 public:
  Group() = default;

  static constexpr std::size_t kDefaultOrderBound = 20000;
  static Group from_generators(std::size_t degree, std::vector<Perm> generators,
                               std::size_t order_bound = kDefaultOrderBound);
  static Group trivial(std::size_t degree = 1) { return from_generators(degree, {}); }

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& generators() const;
  std::size_t num_generators() const { return generators().size(); }
  const Perm& element(std::size_t i) const;
  std::optional<std::size_t> index_of(const Perm& g) const;
  /// Generator word (indices into generators()) evaluating to element i.
  const std::vector<std::uint32_t>& word(std::size_t i) const;
  /// Element i = element(parent(i)) * generator(parent_generator(i)), i > 0.
  std::size_t parent(std::size_t i) const;
  std::uint32_t parent_generator(std::size_t i) const;
  /// Index of the generator g_j itself.
  std::size_t generator_index(std::size_t j) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t conjugate(std::size_t x, std::size_t g) const { return mul(mul(g, x), inv(g)); }

  /// Classes ordered by representative.
  const std::vector<ConjugacyClass>& classes() const;
  std::size_t class_of(std::size_t i) const;
  bool is_abelian() const;

  /// Handles compare equal when they share storage or have the same degree
  /// and generator list (which determines the enumeration).
  friend bool operator==(const Group& a, const Group& b);
  bool valid() const { return d_ != nullptr; }

 private:
  std::shared_ptr<const detail::GroupData> d_;
};

void require_same_group(const Group& a, const Group& b, std::string_view where);

/// Subgroup generated by the given elements, closed by repeated products.
Subgroup generated_subgroup(const Group& g, const std::vector<std::size_t>& gens);
bool is_normal(const Group& g, const Subgroup& n);
/// The subgroup as a stand-alone Group on the same points.
Group subgroup_group(const Group& g, const Subgroup& s);

/// All normal subgroups, ordered by (order, members). |G| <= 2000.
std::vector<Subgroup> normal_subgroups(const Group& g);
/// Largest normal subgroup of order coprime to p.
Subgroup o_p_prime(const Group& g, std::uint32_t p);
/// Largest normal p-subgroup.
Subgroup o_p(const Group& g, std::uint32_t p);

/// Homomorphism determined by the images of the source generators.
class GroupHom {
 public:
  /// Throws RelationViolation unless the generator images extend.
  GroupHom(Group source, Group target, std::vector<std::size_t> images);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  std::vector<std::size_t> kernel() const;
  bool is_surjective() const;

 private:
  Group source_, target_;
  std::vector<std::size_t> map_;
};

struct Quotient {
  Group group;    // G/N acting on the left cosets of N
  GroupHom proj;  // G -> G/N
  /// coset_of[i]: the coset (point of `group`) containing element i.
  std::vector<std::size_t> coset_of;
  /// First element, in enumeration order, of each coset.
  std::vector<std::size_t> representatives;
};

Quotient quotient_group(const Group& g, const Subgroup& n);

struct DirectProduct {
  Group group;  // degree deg H + deg G; H generators first
  std::vector<std::size_t> embed_left;   // H index -> product index
  std::vector<std::size_t> embed_right;  // G index -> product index
};

DirectProduct direct_product(const Group& h, const Group& g);

bool is_p_solvable(const Group& g, std::uint32_t p);

}  // namespace morita
