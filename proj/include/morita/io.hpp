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

#include "json.hpp"
#include "morita/forms.hpp"
#include "morita/group.hpp"
#include "morita/group_algebra.hpp"
#include "morita/matrix.hpp"

namespace morita::io {

using json = nlohmann::json;

/// {"degree": d, "generators": ["(0 1)(2 3)", ...], "order_bound": n}
Group parse_group(const json& j);
json group_to_json(const Group& g);

/// Array of rows; entries are element strings ("2x+1") or integers.
Matrix parse_matrix(const json& j, const Field& f);
json matrix_to_json(const Matrix& m);

/// {class index: coefficient} for a class-constant element.
json central_to_json(const GroupAlgebraElement& z);

/// 64-bit FNV-1a over the field literal, shape and entries, as 16 hex digits.
std::string matrix_hash(const Matrix& m);
std::string text_hash(std::string_view s);

json form_class_to_json(const FormClass& c);

}  // namespace morita::io
