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
#include <string_view>
#include <vector>

#include "morita/rep.hpp"

namespace morita {

/// b(v, w) = v^T gram w.
struct BilinearForm {
  Rep module;
  Matrix gram;
};

enum class FormTag { symmetric, antisymmetric, alternating, asymmetric };
std::string_view to_string(FormTag t);

struct FormClass {
  FormTag tag = FormTag::asymmetric;
  bool symmetric = false;
  bool antisymmetric = false;
  bool alternating = false;
  bool nondegenerate = false;
};

/// The tag is the most specific of alternating, symmetric, antisymmetric
/// that applies, else asymmetric.
FormClass classify_form(const Matrix& gram);

/// Basis of {X : rho(g)^T X rho(g) = X for all generators g}.
std::vector<Matrix> invariant_bilinear_space(const Rep& v);
/// Checks invariance under every group element, not only generators.
bool is_invariant_form(const Rep& v, const Matrix& gram);

enum class SelfDualType { symmetric, alternating, asymmetric, not_self_dual, not_unique };
std::string_view to_string(SelfDualType t);

struct SelfDualResult {
  SelfDualType type = SelfDualType::not_self_dual;
  std::size_t space_dim = 0;
  std::optional<Matrix> gram;  // when the space is 1-dimensional
  FormClass form_class;
};

/// Type of the invariant form of V. Antisymmetric forms in odd
/// characteristic are reported as alternating (they coincide there).
SelfDualResult self_dual_type(const Rep& v, bool require_simple, std::uint64_t seed = 1);

/// Q(v) = v^T upper v with upper upper-triangular; characteristic 2.
struct QuadraticForm {
  Rep module;
  Matrix upper;

  Elem operator()(const Matrix& column) const;
};

/// Folds the lower triangle onto the upper one.
Matrix normalize_quadratic(const Matrix& a);
/// Basis of invariant quadratic forms as upper-triangular matrices.
std::vector<Matrix> invariant_quadratic_space(const Rep& v);
/// Gram matrix A + A^T of the polar form.
Matrix polarize(const Matrix& upper);
/// Columns: a basis of rad Q = { v in rad B : Q(v) = 0 }.
Matrix quadratic_radical(const Matrix& upper);
bool is_nondegenerate_quadratic(const Matrix& upper);
/// Q(g v) = Q(v) for all g and all basis vectors and pairwise sums.
bool is_invariant_quadratic(const Rep& v, const Matrix& upper);

enum class QuadraticVerdict { yes, no, probably_no };
std::string_view to_string(QuadraticVerdict v);

struct QuadraticTypeResult {
  QuadraticVerdict verdict = QuadraticVerdict::no;
  std::optional<Matrix> witness;
  std::size_t space_dim = 0;
  /// How the verdict was reached: "basis", "exhaustive" or "sampled".
  std::string_view search = "basis";
};

QuadraticTypeResult quadratic_type(const Rep& v, std::uint64_t seed = 1);

/// Basis of the invariant forms that are alternating.
std::vector<Matrix> invariant_alternating_space(const Rep& v);
/// A nondegenerate invariant alternating form, found with the same search
/// order as quadratic_type; nullopt when none was found.
std::optional<Matrix> nondegenerate_alternating_form(const Rep& v, std::uint64_t seed = 1);

}  // namespace morita
