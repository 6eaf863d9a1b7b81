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
#include <string>
#include <vector>

#include "morita/io.hpp"

namespace morita::pipelines {

using json = nlohmann::json;

struct Scenario {
  std::string name;
  std::string description;
  std::string pipeline;
  Field field;
  /// One entry, or several for classify_forms.
  std::vector<Group> groups;
  std::uint64_t seed = 1;
  json params = json::object();
  /// Hash of the parsed input, echoed into the report.
  std::string input_hash;
};

/// Throws ParseError on malformed input or an unknown pipeline.
Scenario parse_scenario(const json& j, std::optional<std::uint64_t> seed_override = std::nullopt);
Scenario load_scenario(const std::string& path, std::optional<std::uint64_t> seed_override = std::nullopt);

struct PipelineInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> steps;
};

const std::vector<PipelineInfo>& pipelines();
const PipelineInfo* find_pipeline(std::string_view name);

struct RunResult {
  json report;
  bool passed = false;
};

/// Runs the scenario. Library errors raised inside a pipeline become a
/// failed "completed" check in the report rather than escaping.
RunResult run(const Scenario& s);

}  // namespace morita::pipelines
