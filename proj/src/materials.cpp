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

#include "casimir/materials.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include "materials_default.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace casimir {

  namespace {

    std::string trim(std::string_view s) {
      const auto first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) return {};
      const auto last = s.find_last_not_of(" \t\r");
      return std::string(s.substr(first, last - first + 1));
    }

    std::string where(const IniSection &section, int line) {
      return "[" + section.name + "] line " + std::to_string(line);
    }

    double parse_number(const std::string &text, const std::string &context) {
      const std::string t = trim(text);
      if (t.empty()) throw ConfigError(context + ": expected a number");
      char *end = nullptr;
      errno = 0;
      const double value = std::strtod(t.c_str(), &end);
      if (end != t.c_str() + t.size() || errno == ERANGE)
        throw ConfigError(context + ": '" + t + "' is not a number");
      return value;
    }

    std::vector<double> parse_list(const std::string &text, std::size_t expected, const std::string &context) {
      std::vector<double> values;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(parse_number(item, context));
      if (values.size() != expected)
        throw ConfigError(context + ": expected " + std::to_string(expected) + " comma-separated values");
      return values;
    }

    bool parse_bool(const std::string &text, const std::string &context) {
      const std::string t = trim(text);
      if (t == "true" || t == "1" || t == "yes") return true;
      if (t == "false" || t == "0" || t == "no") return false;
      throw ConfigError(context + ": expected true or false");
    }

  } // namespace

  std::string format_exact(double value) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
      std::snprintf(buf, sizeof buf, "%.*g", precision, value);
      if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
  }

  std::vector<IniSection> parse_ini(std::string_view text) {
    std::vector<IniSection> sections(1);
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view raw = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const std::string line = trim(raw);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
        sections.push_back({trim(std::string_view(line).substr(1, line.size() - 2)), line_no, {}, {}});
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
      sections.back().entries.emplace_back(trim(std::string_view(line).substr(0, eq)),
                                           trim(std::string_view(line).substr(eq + 1)));
      sections.back().entry_lines.push_back(line_no);
    }
    return sections;
  }

  MaterialSpec parse_material_section(const IniSection &section) {
    MaterialSpec spec;
    const std::string prefix = "material ";
    if (section.name.rfind(prefix, 0) != 0) throw ConfigError("section [" + section.name + "] is not a material");
    spec.name = trim(std::string_view(section.name).substr(prefix.size()));
    if (spec.name.empty()) throw ConfigError("[" + section.name + "]: material needs a name");

    bool have_kind = false;
    double omega_p_ev = -1, nu_ev = 0;
    for (std::size_t i = 0; i < section.entries.size(); ++i) {
      const auto &[key, value] = section.entries[i];
      const std::string ctx = where(section, section.entry_lines[i]) + " key '" + key + "'";
      if (key == "kind") {
        try {
          spec.kind = material_kind_from_string(value);
        } catch (const InvalidModelError &e) { throw ConfigError(ctx + ": " + e.what()); }
        have_kind = true;
      } else if (key == "omega_p_ev") {
        omega_p_ev = parse_number(value, ctx + " (eV)");
      } else if (key == "nu_ev") {
        nu_ev = parse_number(value, ctx + " (eV)");
      } else if (key == "eps_inf") {
        spec.eps_inf = parse_number(value, ctx + " (dimensionless)");
      } else if (key == "oscillator") {
        const auto v = parse_list(value, 3, ctx + " (strength, resonance eV, width eV)");
        spec.oscillators_ev.push_back({v[0], v[1], v[2]});
      } else if (key == "carrier") {
        const auto v = parse_list(value, 2, ctx + " (omega_p eV, nu eV)");
        spec.carriers_ev.push_back({v[0], v[1]});
      } else if (key == "sigma_per_s") {
        spec.sigma_per_s = parse_number(value, ctx + " (s^-1)");
      } else if (key == "neglect_intraband_dissipation") {
        spec.neglect_intraband_dissipation = parse_bool(value, ctx);
      } else {
        throw ConfigError(ctx + ": unknown key");
      }
    }
    if (!have_kind) throw ConfigError("[" + section.name + "]: missing key 'kind'");
    if (spec.kind == MaterialKind::drude || spec.kind == MaterialKind::plasma) {
      if (omega_p_ev < 0) throw ConfigError("[" + section.name + "]: missing key 'omega_p_ev' (eV)");
      spec.carriers_ev.insert(spec.carriers_ev.begin(),
                              {omega_p_ev, spec.kind == MaterialKind::plasma ? 0.0 : nu_ev});
    } else if (omega_p_ev >= 0) {
      throw ConfigError("[" + section.name + "]: 'omega_p_ev' only applies to drude/plasma; use 'carrier'");
    }
    try {
      (void)spec.to_model();
    } catch (const InvalidModelError &e) { throw ConfigError("[" + section.name + "]: " + e.what()); }
    return spec;
  }

  DielectricModel MaterialSpec::to_model() const {
    std::vector<Oscillator> osc;
    for (const auto &o : oscillators_ev)
      osc.push_back({o.strength, units::from_ev(o.resonance), units::from_ev(o.width)});
    std::vector<DrudeTerm> carriers;
    for (const auto &t : carriers_ev) carriers.push_back({units::from_ev(t.plasma), units::from_ev(t.relaxation)});

    DielectricModel model;
    switch (kind) {
      case MaterialKind::vacuum: model = DielectricModel::vacuum(); break;
      case MaterialKind::ideal_metal: model = DielectricModel::ideal_metal(); break;
      case MaterialKind::drude:
        if (carriers.size() != 1) throw InvalidModelError("drude material needs exactly one carrier term");
        model = DielectricModel::drude(carriers[0].plasma, carriers[0].relaxation);
        break;
      case MaterialKind::plasma:
        if (carriers.size() != 1) throw InvalidModelError("plasma material needs exactly one carrier term");
        model = DielectricModel::plasma(carriers[0].plasma);
        break;
      case MaterialKind::lorentz_oscillators: model = DielectricModel::lorentz(eps_inf, osc); break;
      case MaterialKind::composite:
        model = DielectricModel::composite(eps_inf, osc, carriers, sigma_per_s);
        break;
    }
    if (neglect_intraband_dissipation) model = model.with_dissipationless_intraband();
    return model;
  }

  std::string MaterialSpec::to_config() const {
    std::ostringstream out;
    out << "[material " << name << "]\n";
    out << "kind = " << to_string(kind) << "\n";
    std::size_t first_carrier = 0;
    if (kind == MaterialKind::drude || kind == MaterialKind::plasma) {
      out << "omega_p_ev = " << format_exact(carriers_ev.at(0).plasma) << "\n";
      if (kind == MaterialKind::drude) out << "nu_ev = " << format_exact(carriers_ev.at(0).relaxation) << "\n";
      first_carrier = 1;
    }
    if (kind == MaterialKind::lorentz_oscillators || kind == MaterialKind::composite)
      out << "eps_inf = " << format_exact(eps_inf) << "\n";
    for (const auto &o : oscillators_ev)
      out << "oscillator = " << format_exact(o.strength) << ", " << format_exact(o.resonance) << ", "
          << format_exact(o.width) << "\n";
    for (std::size_t i = first_carrier; i < carriers_ev.size(); ++i)
      out << "carrier = " << format_exact(carriers_ev[i].plasma) << ", " << format_exact(carriers_ev[i].relaxation)
          << "\n";
    if (sigma_per_s != 0) out << "sigma_per_s = " << format_exact(sigma_per_s) << "\n";
    if (neglect_intraband_dissipation) out << "neglect_intraband_dissipation = true\n";
    return out.str();
  }

  void MaterialLibrary::add(MaterialSpec spec) {
    auto name = spec.name;
    specs_.insert_or_assign(std::move(name), std::move(spec));
  }

  const MaterialSpec &MaterialLibrary::spec(const std::string &name) const {
    auto it = specs_.find(name);
    if (it == specs_.end()) throw ConfigError("unknown material '" + name + "'");
    return it->second;
  }

  std::vector<std::string> MaterialLibrary::names() const {
    std::vector<std::string> out;
    for (const auto &[name, spec] : specs_) out.push_back(name);
    return out;
  }

  void MaterialLibrary::merge_config(std::string_view text) {
    for (const auto &section : parse_ini(text)) {
      if (section.name.rfind("material ", 0) == 0) add(parse_material_section(section));
    }
  }

  std::string_view default_materials_text() { return detail::default_materials_text; }

  MaterialLibrary default_materials() {
    MaterialLibrary lib;
    lib.merge_config(default_materials_text());
    return lib;
  }

} // namespace casimir
