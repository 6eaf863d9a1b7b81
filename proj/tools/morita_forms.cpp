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

// morita-forms: run scenario files through the verification pipelines.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "morita/error.hpp"
#include "morita/pipelines.hpp"

namespace fs = std::filesystem;
namespace mp = morita::pipelines;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

fs::path scenario_dir() {
  if (const char* env = std::getenv("MORITA_SCENARIOS")) return env;
  return MORITA_SCENARIO_DIR;
}

// A path as given, or a bundled scenario name with or without ".json".
fs::path resolve(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  for (const fs::path candidate : {scenario_dir() / arg, scenario_dir() / (arg + ".json")})
    if (fs::exists(candidate)) return candidate;
  return arg;
}

int cmd_run(const std::string& path, const std::string& out, std::optional<std::uint64_t> seed) {
  const mp::Scenario s = mp::load_scenario(resolve(path).string(), seed);
  const mp::RunResult r = mp::run(s);
  const std::string text = r.report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) morita::fail(morita::ErrorCode::ParseError, "cannot write " + out);
    f << text;
  }
  std::size_t failed = 0;
  for (const auto& c : r.report["checks"])
    if (!c["passed"].get<bool>()) {
      ++failed;
      std::cerr << "FAIL " << c["name"].get<std::string>() << "\n";
    }
  std::cerr << s.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.report["checks"].size() - failed << "/"
            << r.report["checks"].size() << " checks)\n";
  return r.passed ? kPass : kFail;
}

int cmd_list() {
  std::cout << "pipelines:\n";
  for (const auto& p : mp::pipelines()) std::cout << "  " << p.name << "  " << p.summary << "\n";
  const fs::path dir = scenario_dir();
  if (!fs::is_directory(dir)) return kPass;
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  std::cout << "scenarios (" << dir.string() << "):\n";
  for (const auto& n : names) std::cout << "  " << n << "\n";
  return kPass;
}

int cmd_describe(const std::string& name) {
  const mp::PipelineInfo* p = mp::find_pipeline(name);
  if (!p) {
    std::cerr << "unknown pipeline '" << name << "'; see 'morita-forms list'\n";
    return kUsage;
  }
  std::cout << p->name << ": " << p->summary << "\n";
  for (std::size_t i = 0; i < p->steps.size(); ++i) std::cout << "  " << i + 1 << ". " << p->steps[i] << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify invariant-form statements on finite group modules"};
  app.require_subcommand(1);

  std::string scenario, out;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "run a scenario and emit a JSON report");
  run->add_option("scenario", scenario, "scenario file, or the name of a bundled scenario")->required();
  run->add_option("--out", out, "write the report here instead of stdout");
  run->add_option("--seed", seed, "override the scenario seed");

  app.add_subcommand("list", "list pipelines and bundled scenarios");

  std::string pipeline;
  auto* describe = app.add_subcommand("describe", "show the steps of a pipeline");
  describe->add_option("pipeline", pipeline)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*run) return cmd_run(scenario, out, seed);
    if (*describe) return cmd_describe(pipeline);
    return cmd_list();
  } catch (const morita::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == morita::ErrorCode::ParseError ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
