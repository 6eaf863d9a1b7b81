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

#include "morita/group_algebra.hpp"
#include "morita/rep.hpp"

namespace morita {

/// H x G-bimodule on column vectors. H acts on the left by lambda(h). The
/// right action m -> m g acts on coordinates by rho(g)^T, where the stored
/// images rho form a homomorphism: rho(g1 g2) = rho(g1) rho(g2).
class Bimodule {
 public:
  Bimodule() = default;

  /// Validates both families as representations and checks that every
  /// left generator commutes with every right operator rho(g)^T.
  static Bimodule make(Group h, Group g, Field f, std::vector<Matrix> left_images, std::vector<Matrix> right_images);
  static Bimodule make_trusted(Rep left, Rep right);

  const Group& left_group() const { return left_.group(); }
  const Group& right_group() const { return right_.group(); }
  const Field& field() const { return left_.field(); }
  std::size_t dim() const { return left_.dim(); }
  /// h -> lambda(h).
  const Rep& left() const { return left_; }
  /// g -> rho(g), the stored homomorphism.
  const Rep& right() const { return right_; }
  /// Coordinate operator of m -> m g.
  Matrix right_operator(std::size_t g) const { return right_.image(g).transpose(); }

  /// Commutation over all element pairs. Throws NonCommutingActions.
  void validate_commutation_exhaustive() const;

 private:
  Rep left_, right_;
};

/// The left kG-module m -> m g^-1, i.e. g -> rho(g)^-T.
Rep as_left_g_module(const Bimodule& m);

struct AssociatedModule {
  DirectProduct product;  // H generators first
  Rep module;             // (h, g) m = h m g^-1
};
AssociatedModule associated_module(const Bimodule& m);

/// (h f g)(m) = f(h^-1 m g^-1): lambda* = lambda^-T, rho* = rho^-T.
Bimodule dual_bimodule(const Bimodule& m);

/// Basis of grams X with (hmg, hng) = (m, n).
std::vector<Matrix> invariant_bimod_forms(const Bimodule& m);
/// Invariance over every pair (h, g).
bool is_invariant_bimod_form(const Bimodule& m, const Matrix& gram);
/// The form (m, n) = m^T X n corresponds to the map M -> M*, m -> X^T m.
Matrix form_to_iso(const Matrix& gram);
Matrix iso_to_form(const Matrix& iso);

struct BimodForm {
  Bimodule bimodule;
  Matrix gram;
};

/// kG as a G x G-bimodule with the delta form (identity gram).
BimodForm regular_bimodule(const Group& g, const Field& f);

struct EBimodule {
  Bimodule bimodule;  // H = G / O_p'(G) on the left, G on the right
  Matrix gram;        // delta restricted to ekG
  GroupAlgebraElement e;
  Subgroup normal;    // O_p'(G)
  Quotient quotient;
  /// Columns: the basis vectors e t_c of ekG inside kG.
  Matrix embedding;
  /// Set when G is not p-solvable; the construction still runs.
  bool not_p_solvable = false;
};

EBimodule e_bimodule(const Group& g, std::uint32_t p, const Field& f);

ProjectivityResult right_projective(const Bimodule& m);

}  // namespace morita
