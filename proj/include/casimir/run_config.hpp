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

#pragma once

#include "casimir/experiments.hpp"
#include "casimir/materials.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace casimir {

  enum class Scenario { g1, g2, g3, dispersion, single_point };

  std::string to_string(Scenario s);
  Scenario scenario_from_string(const std::string &name);

  struct GridSpec {
    double min = 0.2e-6;
    double max = 1.2e-6;
    int points = 20;
    bool log = false;

    std::vector<double> values() const;
  };

  /// Everything a run depends on. Units: meters, kelvin, rad/s, kg; material
  /// parameters in eV inside the material library.
  struct RunConfig {
    Scenario scenario = Scenario::single_point;
    GridSpec grid;         // separation (g1, g2) or atom height (g3), m
    GridSpec kd_grid{0.02, 5.0, 256, false}; // dispersion: k d / pi
    double d = 1e-6;       // single-point separation and dispersion gap, m
    double T = 0;
    std::vector<double> D_list;
    std::string evaluator = "auto";
    std::string broadening = "auto";
    std::string polarization = "both"; // dispersion: tm, te, both

    std::string material = "gold";
    std::string material2;             // second plate; empty means `material`
    std::string gap_material = "vacuum";
    std::string sphere_material = "gold";
    std::string dark_material = "silicon_dark";
    std::string irradiated_material = "silicon_irradiated";
    double radius_m = 100e-6;
    std::string wall_material = "silica";
    AtomSpec atom;

    Tolerances tol;
    std::string output; // not part of the fingerprint
    MaterialLibrary materials = default_materials();

    /// Sets one `[run]` key from its text value. Throws ConfigError naming key and unit.
    void set(const std::string &key, const std::string &value);

    /// Applies a config document: `[material NAME]` sections join the library,
    /// `[run]` keys override the current values.
    void merge(std::string_view text);

    /// Throws ConfigError on an inconsistent configuration.
    void validate() const;

    /// Canonical `[run]` section plus every material it references. Parsing this
    /// text into a default RunConfig reproduces the physics exactly.
    std::string fingerprint() const;

    /// Names of the materials the scenario uses.
    std::vector<std::string> referenced_materials() const;
  };

  /// Documented keys with their units, for --help and error messages.
  std::vector<std::pair<std::string, std::string>> run_keys();

  struct RunOutput {
    std::string csv;
    std::string summary;                  // human-readable result (single-point)
    std::vector<std::string> diagnostics; // per-point convergence lines
    std::vector<std::string> warnings;
  };

  /// Executes a validated config. `threads` = 0 defers to CASIMIR_THREADS.
  RunOutput run(const RunConfig &config, int threads = 0);

} // namespace casimir
