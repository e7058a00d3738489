// Copyright (c) 2026 The casimir-saturation authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "casimir/errors.hpp"
#include "casimir/kernels.hpp"
#include "casimir/run_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

  std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw casimir::ConfigError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int fail(int code, const char *kind, const std::string &message) {
    nlohmann::json j{{"status", "error"}, {"kind", kind}, {"exit_code", code}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return code;
  }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Casimir-Lifshitz energies and forces with saturation-corrected statistics.\n"
               "Units: meters, kelvin, rad/s, kg; material parameters in eV (materials.default).\n"
               "Exit codes: 0 success, 1 configuration error, 2 convergence failure."};
  app.set_help_flag("-h,--help", "Print this help and exit");

  std::map<std::string, std::string> flags;
  std::map<std::string, CLI::Option *> given;
  for (const auto &[key, unit] : casimir::run_keys()) {
    std::string name = key;
    for (auto &ch : name)
      if (ch == '_') ch = '-';
    given[key] = app.add_option("--" + name, flags[key], "[" + unit + "]");
  }
  std::string config_path;
  std::vector<std::string> material_files;
  int threads = 0;
  bool quiet = false, list_materials = false;
  app.add_option("--config", config_path, "INI file with a [run] section and [material NAME] sections; overrides flags");
  app.add_option("--materials", material_files, "Extra material files merged over materials.default");
  app.add_option("--threads", threads, "Worker threads for sweeps (default: CASIMIR_THREADS or hardware count)")
     ->check(CLI::NonNegativeNumber);
  app.add_flag("--quiet", quiet, "Suppress the per-point convergence summary");
  app.add_flag("--list-materials", list_materials, "Print the material library and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return fail(1, "config", e.what());
  }

  try {
    casimir::RunConfig cfg;
    for (const auto &[key, value] : flags)
      if (given[key]->count() > 0) cfg.set(key, value);
    for (const auto &path : material_files) cfg.materials.merge_config(read_file(path));
    if (!config_path.empty()) cfg.merge(read_file(config_path));

    if (list_materials) {
      for (const auto &name : cfg.materials.names()) std::cout << cfg.materials.spec(name).to_config() << "\n";
      return 0;
    }

    const auto out = casimir::run(cfg, threads);
    if (!quiet) {
      std::cerr << "kernels: " << casimir::kernels::to_string(casimir::kernels::active_kernels().isa) << "\n";
      for (const auto &line : out.diagnostics) std::cerr << line << "\n";
    }
    for (const auto &w : out.warnings) std::cerr << "warning: " << w << "\n";

    if (!cfg.output.empty()) {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw casimir::ConfigError("key 'output' (path): cannot write '" + cfg.output + "'");
      file << out.csv;
      std::cout << out.summary;
    } else if (cfg.scenario == casimir::Scenario::single_point) {
      std::cout << out.summary;
    } else {
      std::cout << out.csv;
    }
    return 0;
  } catch (const casimir::ConvergenceError &e) {
    return fail(2, "convergence", e.what());
  } catch (const casimir::ConfigError &e) {
    return fail(1, "config", e.what());
  } catch (const casimir::Error &e) {
    return fail(1, "model", e.what());
  } catch (const std::exception &e) {
    return fail(1, "internal", e.what());
  }
}
