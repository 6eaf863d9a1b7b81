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

#include <string>
#include <vector>

#include <random>

#include "morita/group.hpp"
#include "morita/rep.hpp"

namespace morita::testing {

inline Group make_group(std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(Perm::parse(c, degree));
  return Group::from_generators(degree, gens);
}

inline Group cyclic(std::size_t n) {
  std::string c = "(";
  for (std::size_t i = 0; i < n; ++i) c += (i ? " " : "") + std::to_string(i);
  return make_group(n, {n > 1 ? c + ")" : "()"});
}
inline Group s3() { return make_group(3, {"(0 1)", "(0 1 2)"}); }
inline Group s4() { return make_group(4, {"(0 1)", "(0 1 2 3)"}); }
inline Group a4() { return make_group(4, {"(0 1 2)", "(1 2 3)"}); }
inline Group a5() { return make_group(5, {"(0 1 2 3 4)", "(0 1 2)"}); }

/// SL2(p) acting on the p^2-1 nonzero vectors of GF(p)^2, point (a,b) -> a*p+b-1.
inline Group sl2(unsigned p) {
  auto point = [p](unsigned a, unsigned b) { return a * p + b - 1; };
  const std::size_t deg = p * p - 1;
  std::vector<std::uint32_t> t(deg), s(deg);
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      // [[1,1],[0,1]] and [[0,-1],[1,0]] acting on column vectors (a,b).
      t[point(a, b)] = point((a + b) % p, b);
      s[point(a, b)] = point((p - b) % p, a);
    }
  return Group::from_generators(deg, {Perm(t), Perm(s)});
}

inline Rep s3_natural_gf2() {
  const Field f2 = Field::make(2);
  return Rep::make(s3(), f2,
                   {Matrix::from_ints(f2, {{0, 1}, {1, 0}}), Matrix::from_ints(f2, {{0, 1}, {1, 1}})});
}

inline Rep sign_rep(const Group& g, const Field& f) {
  std::vector<Matrix> gens;
  for (const auto& p : g.generators()) {
    // parity of the permutation
    std::size_t transpositions = 0;
    std::vector<bool> seen(p.degree(), false);
    for (std::uint32_t x = 0; x < p.degree(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::uint32_t y = x; !seen[y]; y = p(y)) {
        seen[y] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    gens.push_back(Matrix::from_ints(f, {{transpositions % 2 ? -1 : 1}}));
  }
  return Rep::make(g, f, gens);
}

inline Rep conjugated(const Rep& v, std::mt19937_64& rng) {
  const Field& f = v.field();
  Matrix t;
  do {
    t = Matrix(f, v.dim(), v.dim());
    for (auto& e : t.data()) e = static_cast<Elem>(rng() % f.order());
  } while (!is_invertible(t));
  const Matrix ti = *inverse(t);
  std::vector<Matrix> gens;
  for (const auto& m : v.generator_images()) gens.push_back(t * m * ti);
  return Rep::make(v.group(), f, gens);
}

// Small modules over GF(2), GF(3), GF(4) of dim <= 3.
inline std::vector<Rep> small_modules() {
  const Field f2 = Field::make(2), f3 = Field::make(3), f4 = Field::make(2, 2);
  std::vector<Rep> out;
  out.push_back(s3_natural_gf2());
  out.push_back(extend_scalars(s3_natural_gf2(), f4));
  out.push_back(permutation_rep(s3(), f2));
  out.push_back(permutation_rep(s3(), f3));
  out.push_back(regular_rep(cyclic(3), f3));
  out.push_back(regular_rep(cyclic(3), f2));
  out.push_back(regular_rep(cyclic(3), f4));
  out.push_back(regular_rep(cyclic(2), f2));
  out.push_back(regular_rep(cyclic(2), f3));
  out.push_back(direct_sum(sign_rep(s3(), f3), trivial_rep(s3(), f3)));
  out.push_back(Rep::make(cyclic(3), f2, {Matrix::from_ints(f2, {{0, 1}, {1, 1}})}));
  out.push_back(Rep::make(cyclic(3), f4, {Matrix::from_ints(f4, {{0, 1}, {1, 1}})}));
  out.push_back(tensor_k(sign_rep(s3(), f3), permutation_rep(s3(), f3)));
  // A4 acting on the 3-dim quotient of its permutation module over GF(2).
  const Rep p4 = permutation_rep(a4(), f2);
  Matrix ones(f2, 4, 1);
  for (std::size_t i = 0; i < 4; ++i) ones(i, 0) = 1;
  out.push_back(quotient_rep(p4, ones));
  return out;
}

/// Non-split extension of the sign module by the trivial one for S3 over
/// GF(3): trivial submodule, sign quotient. Not self-dual.
inline Rep s3_uniserial_gf3() {
  const Field f3 = Field::make(3);
  return Rep::make(s3(), f3, {Matrix::from_ints(f3, {{1, 0}, {0, -1}}), Matrix::from_ints(f3, {{1, 1}, {0, 1}})});
}

/// S4 -> S3 through the action on the three pairings {01|23, 02|13, 03|12}.
inline GroupHom s4_onto_s3(const Group& g4, const Group& g3) {
  return GroupHom(g4, g3, {*g3.index_of(Perm::parse("(1 2)", 3)), *g3.index_of(Perm::parse("(0 2)", 3))});
}

}  // namespace morita::testing
