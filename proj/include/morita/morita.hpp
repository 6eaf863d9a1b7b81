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
#include <vector>

#include "morita/bimodule.hpp"
#include "morita/forms.hpp"

namespace morita {

/// M (x)_kG V as the quotient of the k-tensor space by the relations
/// (m g) (x) v - m (x) (g v). Ambient pair index is i * dim V + k.
struct TensorModule {
  Bimodule bimodule;
  Rep module;
  std::size_t ambient_dim = 0;
  /// Columns: a basis of the relation subspace.
  Matrix relations;
  /// Quotient coordinates of an ambient vector (q x n).
  Matrix projection;
  /// Unit vectors at the non-pivot coordinates (n x q); projection * section = I.
  Matrix section;
  /// Induced left action of H on the quotient.
  Rep h_module;

  std::size_t dim() const { return section.cols(); }
};

/// Relations are taken over the generators of G.
TensorModule tensor_over_kG(const Bimodule& m, const Rep& v);
/// Rank of the relation space spanned over every element of G (oracle).
std::size_t full_group_relation_rank(const Bimodule& m, const Rep& v);

struct TransportReport {
  FormClass b_class;
  FormClass B_class;
  std::size_t quotient_dim = 0;
  /// Gram of the transported form on the quotient basis.
  Matrix gram;
  FormClass classification;
  bool descends = false;
  bool h_invariant = false;
  bool nondegenerate = false;

  bool passed() const { return descends && h_invariant && nondegenerate; }
};

/// B~(m (x) v, m' (x) v') = sum_g b(m g^-1, m') B(v, g^-1 v'), summed over
/// all of G on the ambient space, then checked to descend. Invariance is
/// checked under every element of H. Throws PreconditionFailed.
TransportReport transport_form(const Bimodule& m, const Matrix& b, const Rep& v, const Matrix& B);
TransportReport transport_form(const TensorModule& t, const Matrix& b, const Matrix& B);

/// The chain M(x)V -> M*(x)V* -> Hom_kG(M,kG)(x)V* -> Hom_kG(M,V*) -> (M(x)V)*
/// with every arrow as an explicit matrix. Elements of (M(x)V)* are written
/// by their values on the quotient basis.
struct ChainMaps {
  TensorModule source;
  TensorModule dual_tensor;
  /// Hom_kG(M, kG) with (h f g)(m) = g^-1 f(h^-1 m).
  Bimodule hom_bimodule;
  /// Columns: row-major vec of |G| x dim M matrices.
  Matrix hom_basis;
  TensorModule hom_tensor;
  /// Columns: row-major vec of dim V x dim M matrices spanning Hom_kG(M, V*).
  Matrix hom_v_basis;
  /// Lambda_M : M* -> Hom_kG(M, kG) and rho_M back, in basis coordinates.
  Matrix lambda_m;
  Matrix rho_m;
  Matrix beta_alpha;
  Matrix lambda_id;
  Matrix hat;
  Matrix phi;
  Matrix composite;
  /// Matrix of m (x) v -> (m' (x) v' -> sum_g beta(m g^-1)(m') alpha(v)(g^-1 v')).
  Matrix direct;
  /// The hat map vanishes on the relations of Hom_kG(M,kG) (x) V*.
  bool hat_descends = false;

  bool equal() const { return composite == direct; }
};

/// beta : M -> M* and alpha : V -> V* as coordinate matrices (the form
/// m^T X m' corresponds to X^T). Throws PreconditionFailed.
ChainMaps chain_maps(const Bimodule& m, const Matrix& beta, const Rep& v, const Matrix& alpha);

bool is_self_dual(const Rep& v, std::uint64_t seed = 1);

/// A nondegenerate H x G-invariant form on M, if one is found among the
/// basis forms and seeded random combinations.
std::optional<Matrix> nondegenerate_bimod_form(const Bimodule& m, std::uint64_t seed = 1);

struct LabeledRep {
  std::string label;
  Rep module;
};

struct TheoremARow {
  std::string label;
  std::size_t dim = 0;
  std::size_t image_dim = 0;
  bool self_dual = false;
  bool image_self_dual = false;

  bool holds() const { return self_dual == image_self_dual; }
};

struct TheoremAReport {
  std::vector<TheoremARow> rows;
  bool passed() const;
};

/// Throws PreconditionFailed unless M is self-dual and right projective.
TheoremAReport verify_theorem_A(const Bimodule& m, const std::vector<LabeledRep>& modules, std::uint64_t seed = 1);

struct TypeRow {
  std::string label;
  SelfDualType type = SelfDualType::not_self_dual;
  SelfDualType image_type = SelfDualType::not_self_dual;
  /// Classification of the form transported from V's invariant form.
  FormClass transported;
  bool transport_passed = false;

  bool holds() const;
};

struct TypeReport {
  std::vector<TypeRow> rows;
  bool passed() const;
};

/// b must be symmetric; each V absolutely irreducible and self-dual.
TypeReport verify_type_preservation(const Bimodule& m, const Matrix& b, const std::vector<LabeledRep>& modules,
                                    std::uint64_t seed = 1);

struct QuadraticSide {
  bool projective = false;
  QuadraticTypeResult quadratic;
  bool witness_nondegenerate = false;
  bool witness_invariant = false;
};

struct QuadraticTransportReport {
  QuadraticSide input;
  QuadraticSide output;
  std::size_t image_dim = 0;
  bool passed() const;
};

/// Characteristic 2; b symmetric; P projective and of quadratic type.
QuadraticTransportReport verify_quadratic_transport(const Bimodule& m, const Matrix& b, const Rep& p,
                                                    std::uint64_t seed = 1);

}  // namespace morita
