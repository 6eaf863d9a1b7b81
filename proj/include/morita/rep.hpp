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
#include <memory>
#include <optional>
#include <vector>

#include "morita/field.hpp"
#include "morita/group.hpp"
#include "morita/matrix.hpp"

namespace morita {

namespace detail {
struct RepData;
}

/// Left kG-module on column vectors, given by generator images. Images of
/// all group elements are evaluated along the enumeration words
/// (rho(parent * s) = rho(parent) rho(s)) and memoized on first use.
class Rep {
 public:
  Rep() = default;

  /// Validates shapes, invertibility and 50 seeded random product relations.
  static Rep make(Group g, Field f, std::vector<Matrix> generator_images);
  /// Shape checks only; for images that form a homomorphism by construction.
  static Rep make_trusted(Group g, Field f, std::size_t dim, std::vector<Matrix> generator_images);

  const Group& group() const;
  const Field& field() const;
  std::size_t dim() const;
  const std::vector<Matrix>& generator_images() const;
  /// rho(element i).
  const Matrix& image(std::size_t i) const;

  /// Checks rho(x) rho(s) = rho(x s) for every element x and generator s,
  /// which pins down a homomorphism. Throws RelationViolation.
  void validate_exhaustive() const;

 private:
  std::shared_ptr<const detail::RepData> d_;
};

void require_compatible(const Rep& a, const Rep& b, std::string_view where);

struct RepMap {
  Rep source;
  Rep target;
  Matrix matrix;  // dim target x dim source
};

Rep trivial_rep(const Group& g, const Field& f);
/// rho(g) e_x = e_{g(x)} on the points of the permutation action.
Rep permutation_rep(const Group& g, const Field& f);
/// Left regular module: basis indexed by elements, g e_x = e_{gx}.
Rep regular_rep(const Group& g, const Field& f);
/// rho*(g) = rho(g^-1)^T.
Rep dual_rep(const Rep& v);
Rep direct_sum(const Rep& v, const Rep& w);
Rep tensor_k(const Rep& v, const Rep& w);
Rep extend_scalars(const Rep& v, const Field& target);
/// Restriction along a homomorphism into v's group.
Rep pullback(const Rep& v, const GroupHom& phi);

/// Columns of `basis` span an invariant subspace; returns the action on it.
Rep submodule_rep(const Rep& v, const Matrix& basis);
/// Action on V / span(basis), in the basis of unit vectors complementing the
/// pivot rows of the subspace.
Rep quotient_rep(const Rep& v, const Matrix& basis);
/// Basis (columns) of the submodule generated by the columns of `seeds`.
Matrix spin(const Rep& v, const Matrix& seeds);
/// Same, spinning under the transposed generator images (the dual action up
/// to the inverse, which does not change invariant subspaces).
Matrix spin_transposed(const Rep& v, const Matrix& seeds);
bool is_invariant_subspace(const Rep& v, const Matrix& basis);

/// Basis of Hom_kG(V, W) as dim W x dim V matrices.
std::vector<Matrix> hom_space(const Rep& v, const Rep& w);
std::optional<RepMap> is_isomorphic(const Rep& v, const Rep& w, std::uint64_t seed = 1);

struct ProjectivityResult {
  bool projective = false;
  /// phi with sum_g rho(g) phi rho(g)^-1 = I, when projective.
  std::optional<Matrix> witness;
  /// Order of the Sylow subgroup the decision was made on.
  std::size_t sylow_order = 1;
};

/// Higman's criterion with an explicit witness.
ProjectivityResult is_projective(const Rep& v);
/// Higman's criterion solved directly as a linear system in the d^2 entries
/// of phi. Exact but quartic in dim; used as an oracle at small dims.
ProjectivityResult higman_solve(const Rep& v);
/// sum_g rho(g) phi rho(g)^-1.
Matrix higman_trace(const Rep& v, const Matrix& phi);
/// A Sylow p-subgroup (members as element indices).
Subgroup sylow_subgroup(const Group& g, std::uint32_t p);

}  // namespace morita
