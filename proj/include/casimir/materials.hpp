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

#include "casimir/dielectric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace casimir {

  /// One `[section]` of an INI-style document, keys in file order.
  struct IniSection {
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<int> entry_lines;
  };

  /// `key = value` lines grouped under `[section]` headers; `#` starts a comment.
  /// Entries before the first header go into a section with an empty name.
  std::vector<IniSection> parse_ini(std::string_view text);

  /// Material as written in a config file: frequencies in eV, conductivity in
  /// s^-1 (Gaussian). Kept in config units so that a config round-trips exactly.
  struct MaterialSpec {
    std::string name;
    MaterialKind kind = MaterialKind::vacuum;
    double eps_inf = 1.0;
    std::vector<Oscillator> oscillators_ev;
    std::vector<DrudeTerm> carriers_ev;
    double sigma_per_s = 0.0;
    bool neglect_intraband_dissipation = false;

    DielectricModel to_model() const;
    std::string to_config() const;

    friend bool operator==(const MaterialSpec &, const MaterialSpec &) = default;
  };

  class MaterialLibrary {
  public:
    void add(MaterialSpec spec);
    bool contains(const std::string &name) const { return specs_.count(name) != 0; }
    const MaterialSpec &spec(const std::string &name) const;
    DielectricModel model(const std::string &name) const { return spec(name).to_model(); }
    std::vector<std::string> names() const;

    /// Adds every `[material NAME]` section of `text`; later definitions replace earlier ones.
    void merge_config(std::string_view text);

  private:
    std::map<std::string, MaterialSpec> specs_;
  };

  /// Parses one `[material NAME]` section.
  MaterialSpec parse_material_section(const IniSection &section);

  /// Contents of the shipped `materials.default` file.
  std::string_view default_materials_text();

  /// Library holding the shipped defaults.
  MaterialLibrary default_materials();

  /// Shortest decimal text that parses back to exactly `value`.
  std::string format_exact(double value);

} // namespace casimir
