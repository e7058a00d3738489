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

#include "casimir/run_config.hpp"

#include "casimir/errors.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace casimir {

  namespace {

    struct KeyInfo {
      const char *key;
      const char *unit;
    };

    constexpr KeyInfo key_table[] = {
       {"scenario", "g1|g2|g3|dispersion|single-point"},
       {"d_min", "m"},
       {"d_max", "m"},
       {"points", "count"},
       {"spacing", "linear|log"},
       {"d", "m"},
       {"T", "K"},
       {"D", "comma-separated list, dimensionless"},
       {"evaluator", "auto|zero-t|matsubara|real-axis|saturated"},
       {"broadening", "auto|zero-term|all-terms"},
       {"polarization", "tm|te|both"},
       {"kd_over_pi_min", "dimensionless"},
       {"kd_over_pi_max", "dimensionless"},
       {"kd_points", "count"},
       {"material", "material name"},
       {"material2", "material name"},
       {"gap_material", "material name"},
       {"sphere_material", "material name"},
       {"dark_material", "material name"},
       {"irradiated_material", "material name"},
       {"radius_m", "m"},
       {"wall_material", "material name"},
       {"alpha0_m3", "m^3"},
       {"omega_a_rad_s", "rad/s"},
       {"atom_mass_kg", "kg"},
       {"trap_frequency_rad_s", "rad/s"},
       {"k_rel", "relative"},
       {"freq_rel", "relative"},
       {"real_axis_rel", "relative"},
       {"series_tail", "relative"},
       {"max_terms", "count"},
       {"max_panels", "count"},
       {"output", "path"},
    };

    const char *unit_of(const std::string &key) {
      for (const auto &k : key_table)
        if (key == k.key) return k.unit;
      return nullptr;
    }

    std::string trim(std::string_view s) {
      const auto first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) return {};
      const auto last = s.find_last_not_of(" \t\r");
      return std::string(s.substr(first, last - first + 1));
    }

    double number(const std::string &text, const std::string &ctx) {
      const std::string t = trim(text);
      char *end = nullptr;
      errno = 0;
      const double v = std::strtod(t.c_str(), &end);
      if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError(ctx + ": '" + t + "' is not a finite number");
      return v;
    }

    long integer(const std::string &text, const std::string &ctx) {
      const std::string t = trim(text);
      char *end = nullptr;
      errno = 0;
      const long v = std::strtol(t.c_str(), &end, 10);
      if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
        throw ConfigError(ctx + ": '" + t + "' is not an integer");
      return v;
    }

    std::string join(const std::vector<double> &values) {
      std::string out;
      for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + format_exact(values[i]);
      return out;
    }

  } // namespace

  std::string to_string(Scenario s) {
    switch (s) {
    case Scenario::g1: return "g1";
    case Scenario::g2: return "g2";
    case Scenario::g3: return "g3";
    case Scenario::dispersion: return "dispersion";
    case Scenario::single_point: return "single-point";
    }
    return "?";
  }

  Scenario scenario_from_string(const std::string &name) {
    for (auto s : {Scenario::g1, Scenario::g2, Scenario::g3, Scenario::dispersion, Scenario::single_point})
      if (to_string(s) == name) return s;
    throw ConfigError("unknown scenario '" + name + "' (expected g1, g2, g3, dispersion or single-point)");
  }

  std::vector<double> GridSpec::values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) {
      const double t = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
      v[i] = log ? min * std::pow(max / min, t) : min + (max - min) * t;
    }
    if (points > 1) v.back() = max;
    return v;
  }

  std::vector<std::pair<std::string, std::string>> run_keys() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &k : key_table) out.emplace_back(k.key, k.unit);
    return out;
  }

  void RunConfig::set(const std::string &key, const std::string &raw) {
    const char *unit = unit_of(key);
    if (!unit) throw ConfigError("unknown key '" + key + "'");
    const std::string ctx = "key '" + key + "' (" + unit + ")";
    const std::string value = trim(raw);

    if (key == "scenario") {
      scenario = scenario_from_string(value);
    } else if (key == "d_min") {
      grid.min = number(value, ctx);
    } else if (key == "d_max") {
      grid.max = number(value, ctx);
    } else if (key == "points") {
      grid.points = static_cast<int>(integer(value, ctx));
    } else if (key == "spacing") {
      if (value != "linear" && value != "log") throw ConfigError(ctx + ": expected linear or log");
      grid.log = value == "log";
      kd_grid.log = grid.log;
    } else if (key == "d") {
      d = number(value, ctx);
    } else if (key == "T") {
      T = number(value, ctx);
    } else if (key == "D") {
      D_list.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!trim(item).empty()) D_list.push_back(number(item, ctx));
    } else if (key == "evaluator") {
      if (value != "auto") evaluator_from_string(value);
      evaluator = value;
    } else if (key == "broadening") {
      if (value != "auto") broadening_from_string(value);
      broadening = value;
    } else if (key == "polarization") {
      if (value != "tm" && value != "te" && value != "both") throw ConfigError(ctx + ": expected tm, te or both");
      polarization = value;
    } else if (key == "kd_over_pi_min") {
      kd_grid.min = number(value, ctx);
    } else if (key == "kd_over_pi_max") {
      kd_grid.max = number(value, ctx);
    } else if (key == "kd_points") {
      kd_grid.points = static_cast<int>(integer(value, ctx));
    } else if (key == "material") {
      material = value;
    } else if (key == "material2") {
      material2 = value;
    } else if (key == "gap_material") {
      gap_material = value;
    } else if (key == "sphere_material") {
      sphere_material = value;
    } else if (key == "dark_material") {
      dark_material = value;
    } else if (key == "irradiated_material") {
      irradiated_material = value;
    } else if (key == "radius_m") {
      radius_m = number(value, ctx);
    } else if (key == "wall_material") {
      wall_material = value;
    } else if (key == "alpha0_m3") {
      atom.alpha0 = number(value, ctx);
    } else if (key == "omega_a_rad_s") {
      atom.omega_a = number(value, ctx);
    } else if (key == "atom_mass_kg") {
      atom.mass = number(value, ctx);
    } else if (key == "trap_frequency_rad_s") {
      atom.trap_frequency = number(value, ctx);
    } else if (key == "k_rel") {
      tol.k_rel = number(value, ctx);
    } else if (key == "freq_rel") {
      tol.freq_rel = number(value, ctx);
    } else if (key == "real_axis_rel") {
      tol.real_axis_rel = number(value, ctx);
    } else if (key == "series_tail") {
      tol.series_tail = number(value, ctx);
    } else if (key == "max_terms") {
      tol.max_terms = integer(value, ctx);
    } else if (key == "max_panels") {
      tol.max_panels = static_cast<int>(integer(value, ctx));
    } else if (key == "output") {
      output = value;
    }
  }

  void RunConfig::merge(std::string_view text) {
    materials.merge_config(text);
    for (const auto &section : parse_ini(text)) {
      if (section.name.rfind("material ", 0) == 0) continue;
      if (section.name != "run") {
        if (section.name.empty()) {
          if (section.entries.empty()) continue;
          throw ConfigError("line " + std::to_string(section.entry_lines[0]) + ": key outside a [run] section");
        }
        throw ConfigError("line " + std::to_string(section.line) + ": unknown section [" + section.name + "]");
      }
      for (std::size_t i = 0; i < section.entries.size(); ++i) {
        try {
          set(section.entries[i].first, section.entries[i].second);
        } catch (const ConfigError &e) {
          throw ConfigError("[run] line " + std::to_string(section.entry_lines[i]) + ": " + e.what());
        }
      }
    }
  }

  std::vector<std::string> RunConfig::referenced_materials() const {
    switch (scenario) {
    case Scenario::g2: return {sphere_material, gap_material, dark_material, irradiated_material};
    case Scenario::g3: return {gap_material, wall_material};
    default: return {material, material2.empty() ? material : material2, gap_material};
    }
  }

  void RunConfig::validate() const {
    auto check_grid = [](const GridSpec &g, const char *lo, const char *hi, const char *count) {
      if (g.points < 2) throw ConfigError(std::string("key '") + count + "' (count): a sweep needs at least 2 points");
      if (!(g.min > 0)) throw ConfigError(std::string("key '") + lo + "' (" + unit_of(lo) + "): must be > 0");
      if (!(g.max > g.min))
        throw ConfigError(std::string("key '") + hi + "' (" + unit_of(hi) + "): must exceed " + lo);
    };
    if (!(T >= 0)) throw ConfigError("key 'T' (K): must be >= 0");
    for (double D : D_list)
      if (!(D >= 0)) throw ConfigError("key 'D' (comma-separated list, dimensionless): entries must be >= 0");
    for (const auto &name : referenced_materials())
      if (!materials.contains(name)) throw ConfigError("unknown material '" + name + "'");
    if (!(tol.k_rel > 0) || !(tol.freq_rel > 0) || !(tol.real_axis_rel > 0) || !(tol.series_tail > 0))
      throw ConfigError("tolerances must be > 0");
    if (tol.max_terms < 1 || tol.max_panels < 1) throw ConfigError("max_terms and max_panels must be >= 1");

    const bool sweep = scenario == Scenario::g1 || scenario == Scenario::g2 || scenario == Scenario::g3;
    if (sweep) {
      check_grid(grid, "d_min", "d_max", "points");
      if (!(T > 0)) throw ConfigError("key 'T' (K): sweep scenarios need T > 0");
      if (evaluator != "auto") throw ConfigError("key 'evaluator': sweeps fix their evaluators; use auto");
    }
    if (scenario == Scenario::g2 && !(radius_m > 0)) throw ConfigError("key 'radius_m' (m): must be > 0");
    if (scenario == Scenario::g3) {
      try {
        atom.validate();
      } catch (const DomainError &e) { throw ConfigError(e.what()); }
    }
    if (scenario == Scenario::dispersion) check_grid(kd_grid, "kd_over_pi_min", "kd_over_pi_max", "kd_points");
    if ((scenario == Scenario::dispersion || scenario == Scenario::single_point) && !(d > 0))
      throw ConfigError("key 'd' (m): must be > 0");
    if (scenario == Scenario::single_point && D_list.size() > 1)
      throw ConfigError("key 'D': single-point runs take at most one damping value");
  }

  std::string RunConfig::fingerprint() const {
    std::ostringstream out;
    out << "[run]\n";
    out << "scenario = " << to_string(scenario) << "\n";
    switch (scenario) {
    case Scenario::g1:
    case Scenario::g2:
    case Scenario::g3:
      out << "d_min = " << format_exact(grid.min) << "\n";
      out << "d_max = " << format_exact(grid.max) << "\n";
      out << "points = " << grid.points << "\n";
      out << "spacing = " << (grid.log ? "log" : "linear") << "\n";
      break;
    case Scenario::dispersion:
      out << "kd_over_pi_min = " << format_exact(kd_grid.min) << "\n";
      out << "kd_over_pi_max = " << format_exact(kd_grid.max) << "\n";
      out << "kd_points = " << kd_grid.points << "\n";
      out << "spacing = " << (kd_grid.log ? "log" : "linear") << "\n";
      out << "polarization = " << polarization << "\n";
      out << "d = " << format_exact(d) << "\n";
      break;
    case Scenario::single_point: out << "d = " << format_exact(d) << "\n"; break;
    }
    if (scenario != Scenario::dispersion) {
      out << "T = " << format_exact(T) << "\n";
      out << "D = " << join(D_list) << "\n";
      out << "evaluator = " << evaluator << "\n";
      out << "broadening = " << broadening << "\n";
    }
    out << "gap_material = " << gap_material << "\n";
    switch (scenario) {
    case Scenario::g2:
      out << "sphere_material = " << sphere_material << "\n";
      out << "dark_material = " << dark_material << "\n";
      out << "irradiated_material = " << irradiated_material << "\n";
      out << "radius_m = " << format_exact(radius_m) << "\n";
      break;
    case Scenario::g3:
      out << "wall_material = " << wall_material << "\n";
      out << "alpha0_m3 = " << format_exact(atom.alpha0) << "\n";
      out << "omega_a_rad_s = " << format_exact(atom.omega_a) << "\n";
      out << "atom_mass_kg = " << format_exact(atom.mass) << "\n";
      out << "trap_frequency_rad_s = " << format_exact(atom.trap_frequency) << "\n";
      break;
    default:
      out << "material = " << material << "\n";
      if (!material2.empty()) out << "material2 = " << material2 << "\n";
    }
    out << "k_rel = " << format_exact(tol.k_rel) << "\n";
    out << "freq_rel = " << format_exact(tol.freq_rel) << "\n";
    out << "real_axis_rel = " << format_exact(tol.real_axis_rel) << "\n";
    out << "series_tail = " << format_exact(tol.series_tail) << "\n";
    out << "max_terms = " << tol.max_terms << "\n";
    out << "max_panels = " << tol.max_panels << "\n";

    std::vector<std::string> seen;
    for (const auto &name : referenced_materials()) {
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
      seen.push_back(name);
      out << "\n" << materials.spec(name).to_config();
    }
    return out.str();
  }

} // namespace casimir
