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

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/sweep_csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace casimir {

  namespace {

    Broadening broadening_for(const RunConfig &cfg, Broadening fallback) {
      return cfg.broadening == "auto" ? fallback : broadening_from_string(cfg.broadening);
    }

    LayerStack plates(const RunConfig &cfg) {
      const auto &lib = cfg.materials;
      return {lib.model(cfg.material), lib.model(cfg.gap_material),
              lib.model(cfg.material2.empty() ? cfg.material : cfg.material2), cfg.d};
    }

    ThermalSpec single_point_thermal(const RunConfig &cfg) {
      ThermalSpec th;
      th.T = cfg.T;
      th.D = cfg.D_list.empty() ? 0.0 : cfg.D_list.front();
      th.broadening = broadening_for(cfg, Broadening::zero_term);
      if (cfg.evaluator != "auto") {
        th.evaluator = evaluator_from_string(cfg.evaluator);
      } else if (cfg.T == 0) {
        th.evaluator = Evaluator::zero_t;
      } else {
        th.evaluator = th.D > 0 ? Evaluator::saturated : Evaluator::matsubara;
      }
      return th;
    }

    std::string sci(double v) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      return buf;
    }

    RunOutput single_point(const RunConfig &cfg) {
      const auto thermal = single_point_thermal(cfg);
      try {
        thermal.validate();
      } catch (const DomainError &e) { throw ConfigError(e.what()); }
      const auto ev = evaluate(plates(cfg), thermal, cfg.tol);

      SweepResult table;
      table.scenario = "single-point";
      table.x_label = "d_m";
      table.columns = {"energy_J_m2", "energy_tm_J_m2", "energy_te_J_m2",
                       "pressure_N_m2", "pressure_tm_N_m2", "pressure_te_N_m2"};
      table.x = {cfg.d};
      table.rows = {{ev.energy.total, ev.energy.tm, ev.energy.te, ev.pressure.total, ev.pressure.tm, ev.pressure.te}};
      std::ostringstream csv;
      write_sweep_csv(csv, table, cfg.fingerprint());

      RunOutput out;
      out.csv = csv.str();
      std::ostringstream s;
      s << "evaluator  " << to_string(thermal.evaluator) << "\n";
      s << "energy     " << sci(ev.energy.total) << " J/m^2 (TM " << sci(ev.energy.tm) << ", TE " << sci(ev.energy.te)
        << ")\n";
      s << "pressure   " << sci(ev.pressure.total) << " N/m^2 (TM " << sci(ev.pressure.tm) << ", TE "
        << sci(ev.pressure.te) << ")\n";
      s << "|F|        " << sci(std::abs(ev.pressure.total)) << " N/m^2\n";
      out.summary = s.str();
      std::ostringstream diag;
      diag << "d=" << cfg.d << " n_matsubara=" << ev.energy.n_matsubara_used << " k_points=" << ev.energy.k_points
           << " est_rel_error=" << ev.energy.est_rel_error;
      out.diagnostics.push_back(diag.str());
      return out;
    }

    RunOutput dispersion(const RunConfig &cfg) {
      LayerStack stack = plates(cfg);
      stack.medium1 = stack.medium1.with_dissipationless_intraband();
      stack.medium2 = stack.medium2.with_dissipationless_intraband();
      std::vector<double> k;
      for (double kd : cfg.kd_grid.values()) k.push_back(kd * units::pi / cfg.d);

      DispersionResult all;
      for (auto pol : polarizations) {
        if (cfg.polarization == "tm" && pol != Polarization::tm) continue;
        if (cfg.polarization == "te" && pol != Polarization::te) continue;
        auto r = dispersion_solve(stack, pol, k);
        all.points.insert(all.points.end(), r.points.begin(), r.points.end());
        all.diagnostics.insert(all.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
      }
      std::ostringstream csv;
      write_fingerprint(csv, cfg.fingerprint());
      write_dispersion_csv(csv, all, cfg.d, surface_plasmon_frequency(stack.medium1));
      RunOutput out;
      out.csv = csv.str();
      out.diagnostics = all.diagnostics;
      out.summary = std::to_string(all.points.size()) + " mode points\n";
      return out;
    }

    RunOutput sweep(const RunConfig &cfg, int threads) {
      const auto &lib = cfg.materials;
      SweepOptions opt{cfg.tol, threads};
      const auto grid = cfg.grid.values();
      SweepResult r;
      switch (cfg.scenario) {
      case Scenario::g1:
        r = g1_curve(grid, plates(cfg), cfg.T, cfg.D_list, broadening_for(cfg, Broadening::all_terms), opt);
        break;
      case Scenario::g2: {
        const auto sphere = lib.model(cfg.sphere_material), gap = lib.model(cfg.gap_material);
        const LayerStack dark{sphere, gap, lib.model(cfg.dark_material), grid.front()};
        const LayerStack irradiated{sphere, gap, lib.model(cfg.irradiated_material), grid.front()};
        r = g2_delta_force(grid, dark, irradiated, SphereSpec{cfg.radius_m}, cfg.T, cfg.D_list, opt);
        break;
      }
      case Scenario::g3:
        r = g3_trap_shift(grid, lib.model(cfg.gap_material), lib.model(cfg.wall_material), cfg.atom, cfg.T,
                          cfg.D_list, opt);
        break;
      default: throw ConfigError("not a sweep scenario");
      }
      std::ostringstream csv;
      write_sweep_csv(csv, r, cfg.fingerprint());
      RunOutput out;
      out.csv = csv.str();
      out.diagnostics = r.diagnostics;
      out.warnings = r.warnings;
      out.summary = std::to_string(r.x.size()) + " points x " + std::to_string(r.columns.size()) + " curves\n";
      return out;
    }

  } // namespace

  RunOutput run(const RunConfig &config, int threads) {
    config.validate();
    switch (config.scenario) {
    case Scenario::single_point: return single_point(config);
    case Scenario::dispersion: return dispersion(config);
    default: return sweep(config, threads);
    }
  }

} // namespace casimir
