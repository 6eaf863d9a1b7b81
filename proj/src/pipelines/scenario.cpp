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

#include <fstream>
#include <sstream>

#include "morita/pipelines.hpp"

namespace morita::pipelines {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::ParseError, what); }

}  // namespace

Scenario parse_scenario(const json& j, std::optional<std::uint64_t> seed_override) {
  if (!j.is_object()) parse_fail("scenario must be a JSON object");
  for (const char* key : {"name", "pipeline", "field"})
    if (!j.contains(key) || !j[key].is_string()) parse_fail(std::string("scenario needs a string \"") + key + "\"");
  Scenario s;
  s.name = j["name"].get<std::string>();
  s.description = j.value("description", std::string());
  s.pipeline = j["pipeline"].get<std::string>();
  if (!find_pipeline(s.pipeline)) parse_fail("unknown pipeline '" + s.pipeline + "'");
  try {
    s.field = Field::parse(j["field"].get<std::string>());
  } catch (const Error& e) {
    parse_fail(std::string("bad field literal: ") + e.what());
  }
  if (j.contains("group")) s.groups.push_back(io::parse_group(j["group"]));
  if (j.contains("groups")) {
    if (!j["groups"].is_array()) parse_fail("\"groups\" must be an array");
    for (const auto& g : j["groups"]) s.groups.push_back(io::parse_group(g));
  }
  if (s.groups.empty()) parse_fail("scenario needs \"group\" or \"groups\"");
  if (s.groups.size() > 1 && s.pipeline != "classify_forms") parse_fail("only classify_forms takes several groups");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_fail("seed must be a nonnegative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (seed_override) s.seed = *seed_override;
  if (j.contains("params")) {
    if (!j["params"].is_object()) parse_fail("\"params\" must be an object");
    s.params = j["params"];
  }
  if (s.params.contains("p")) {
    if (!s.params["p"].is_number_unsigned() || s.params["p"].get<std::uint32_t>() != s.field.characteristic())
      parse_fail("params.p must equal the field characteristic");
  }
  json canonical = j;
  canonical["seed"] = s.seed;
  s.input_hash = io::text_hash(canonical.dump());
  return s;
}

Scenario load_scenario(const std::string& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    parse_fail("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_scenario(j, seed_override);
}

}  // namespace morita::pipelines
