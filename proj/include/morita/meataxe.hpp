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
#include <vector>

#include "morita/poly.hpp"
#include "morita/rep.hpp"

namespace morita {

/// Norton's irreducibility witness: an algebra element X and irreducible
/// factor f of its characteristic polynomial with dim ker f(X) = deg f,
/// such that a kernel vector of f(X) spins to V and a kernel vector of
/// f(X)^T spins to V under the transposed action.
struct NortonCertificate {
  Matrix element;
  Poly factor;
  Matrix kernel_vector;
  Matrix dual_kernel_vector;
};

struct MeatAxeResult {
  bool simple = false;
  std::optional<NortonCertificate> certificate;  // when simple
  Matrix submodule;                               // columns; when not simple
};

MeatAxeResult meataxe_simple(const Rep& v, std::uint64_t seed = 1);
/// Re-runs the checks recorded in a certificate.
bool verify_certificate(const Rep& v, const NortonCertificate& cert);

struct SimpleFactor {
  Rep module;
  std::size_t multiplicity = 0;
};

/// Composition factors grouped up to isomorphism, in order of discovery
/// (submodule side before quotient side). dim V <= 64.
std::vector<SimpleFactor> split_into_simples(const Rep& v, std::uint64_t seed = 1);

/// Simple and End_kG(V) = k.
bool is_absolutely_irreducible(const Rep& v, std::uint64_t seed = 1);

}  // namespace morita
