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
#include <map>
#include <vector>

#include "morita/group_algebra.hpp"
#include "morita/rep.hpp"

namespace morita {

/// Central elements are group algebra elements constant on classes.
using CentralElement = GroupAlgebraElement;

/// One sum per conjugacy class, in class order.
std::vector<CentralElement> class_sums(const Group& g, const Field& f);

/// Sparse form {class index: coefficient}; throws RelationViolation when the
/// element is not constant on classes.
std::map<std::size_t, Elem> to_class_coefficients(const CentralElement& z);

struct BlockDecomposition {
  Field field;
  std::vector<CentralElement> idempotents;
  std::size_t principal_index = 0;
};

/// Splits Z(kG) by factoring minimal polynomials of class sums and taking
/// CRT idempotents. Throws SplitIncomplete when a summand has a residue
/// field larger than f.
BlockDecomposition central_primitive_idempotents(const Group& g, const Field& f);

/// As above, but extends f by the residue degrees found until every summand
/// splits.
BlockDecomposition central_primitive_idempotents_split(const Group& g, const Field& f);

/// The index whose idempotent acts as the identity. Throws
/// NotBlockHomogeneous if some idempotent acts as neither 0 nor 1.
std::size_t block_of_module(const Rep& v, const BlockDecomposition& dec);

/// (1/|O_p'(G)|) sum over O_p'(G).
CentralElement principal_block_idempotent_psolvable(const Group& g, std::uint32_t p, const Field& f);

/// The left module e kG for a central idempotent e.
Rep block_module(const CentralElement& e);

/// Coefficients moved into a larger field.
CentralElement extend_element(const CentralElement& z, const Field& target);
/// Coefficients pulled back into a subfield, if they all lie in it.
std::optional<CentralElement> restrict_element(const CentralElement& z, const Field& subfield);

}  // namespace morita
