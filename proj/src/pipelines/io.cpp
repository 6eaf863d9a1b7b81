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

#include "morita/io.hpp"

#include <cstdio>

#include "morita/blocks.hpp"

namespace morita::io {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
}

void fnv(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::ParseError, what); }

}  // namespace

Group parse_group(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    parse_fail("group needs \"degree\" and \"generators\"");
  if (!j["degree"].is_number_unsigned()) parse_fail("group degree must be a nonnegative integer");
  const std::size_t degree = j["degree"].get<std::size_t>();
  if (!j["generators"].is_array()) parse_fail("group generators must be an array");
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) parse_fail("generators are cycle-notation strings");
    gens.push_back(Perm::parse(g.get<std::string>(), degree));
  }
  const std::size_t bound = j.value("order_bound", std::size_t{20000});
  return Group::from_generators(degree, std::move(gens), bound);
}

json group_to_json(const Group& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_string());
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

Matrix parse_matrix(const json& j, const Field& f) {
  if (!j.is_array()) parse_fail("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) parse_fail("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (e.is_string())
        m(r, c) = f.parse_element(e.get<std::string>());
      else if (e.is_number_integer())
        m(r, c) = f.from_int(e.get<std::int64_t>());
      else
        parse_fail("matrix entries are strings or integers");
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json central_to_json(const CentralElement& z) {
  json out = json::object();
  for (const auto& [k, c] : to_class_coefficients(z)) out[std::to_string(k)] = z.field().format(c);
  return out;
}

std::string matrix_hash(const Matrix& m) {
  std::uint64_t h = kFnvOffset;
  fnv(h, m.field().literal());
  fnv(h, static_cast<std::uint64_t>(m.rows()));
  fnv(h, static_cast<std::uint64_t>(m.cols()));
  for (auto e : m.data()) fnv(h, static_cast<std::uint64_t>(e));
  return hex(h);
}

std::string text_hash(std::string_view s) {
  std::uint64_t h = kFnvOffset;
  fnv(h, s);
  return hex(h);
}

json form_class_to_json(const FormClass& c) {
  return {{"tag", std::string(to_string(c.tag))},
          {"symmetric", c.symmetric},
          {"antisymmetric", c.antisymmetric},
          {"alternating", c.alternating},
          {"nondegenerate", c.nondegenerate}};
}

}  // namespace morita::io
