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

#include "casimir/experiments.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace casimir {

  double normalize_ideal(double pressure, double d) {
    if (!(d > 0)) throw DomainError("normalize_ideal requires d > 0");
    return std::abs(pressure) / units::ideal_pressure(d);
  }

  double pfa_sphere_force(const SphereSpec &sphere, double energy_per_area) {
    return 2.0 * units::pi * sphere.radius * energy_per_area;
  }

  double pfa_force_gradient(const SphereSpec &sphere, double plate_pressure) {
    return -2.0 * units::pi * sphere.radius * plate_pressure;
  }

  double pfa_plate_pressure(const SphereSpec &sphere, double force_gradient) {
    return -force_gradient / (2.0 * units::pi * sphere.radius);
  }

  void AtomSpec::validate() const {
    if (!(alpha0 >= 0) || !std::isfinite(alpha0)) throw DomainError("atomic polarizability must be >= 0");
    if (!(omega_a > 0) || !(mass > 0) || !(trap_frequency > 0))
      throw DomainError("atom resonance, mass and trap frequency must be positive");
  }

  AtomWallResult atom_wall(const DielectricModel &gap, const DielectricModel &wall, const AtomSpec &atom, double z,
                           const ThermalSpec &thermal, const Tolerances &tol) {
    atom.validate();
    thermal.validate();
    if (thermal.evaluator != Evaluator::matsubara && thermal.evaluator != Evaluator::saturated)
      throw DomainError("atom-wall energies use the matsubara or saturated evaluator");

    spectral::Stats stats;
    const spectral::AtomSpectrum spectrum(gap, wall, atom.polarizability(), z, {tol.k_rel, tol.max_panels}, stats);
    const spectral::Spectrum S = [&spectrum](double xi) { return spectrum(xi); };
    const spectral::SeriesControl ctl{tol.series_tail, 3, tol.max_terms, tol.zero_term_only};
    const spectral::Budget budget{tol.freq_rel, tol.max_panels};
    const double spacing = units::matsubara_spacing(thermal.T);

    spectral::EngineResult r;
    if (thermal.evaluator == Evaluator::matsubara) {
      r = spectral::matsubara_sum(S, spacing, ctl);
    } else if (thermal.broadening == Broadening::all_terms) {
      r = spectral::periodic_lorentz_sum(S, units::hbar_beta(thermal.T), thermal.D, ctl, budget);
    } else {
      const double delta = thermal.D / units::hbar_beta(thermal.T);
      const auto features = spectral::frequency_features({&gap, &wall}, z);
      const auto zero = spectral::lorentz_zero_term(S, delta, 80.0 * units::c / (2.0 * z), features, budget);
      r = spectral::matsubara_sum(S, spacing, ctl, true);
      r.value += zero.value;
      r.terms += 1;
      r.est_rel_error += zero.est_rel_error;
    }
    if (!stats.converged && stats.worst_rel_error > 10 * tol.k_rel) {
      std::ostringstream msg;
      msg << "atom-wall k integral did not converge at z = " << z;
      throw ConvergenceError(msg.str(), 0.0, stats.worst_rel_error);
    }

    const double pref = -units::k_boltzmann * thermal.T;
    AtomWallResult out;
    out.energy_tm = pref * r.value[0];
    out.energy_te = pref * r.value[1];
    out.energy = out.energy_tm + out.energy_te;
    out.curvature = pref * (r.value[2] + r.value[3]) / (z * z);
    out.n_matsubara_used = r.terms;
    out.k_points = stats.k_points;
    out.est_rel_error = r.est_rel_error + stats.worst_rel_error;
    return out;
  }

  double trap_shift(const AtomSpec &atom, double curvature) {
    return curvature / (2.0 * atom.mass * atom.trap_frequency * atom.trap_frequency);
  }

  std::vector<double> SweepResult::column(const std::string &name) const {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j] != name) continue;
      std::vector<double> out;
      for (const auto &row : rows) out.push_back(row.at(j));
      return out;
    }
    throw ConfigError("sweep has no column '" + name + "'");
  }

  int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char *env = std::getenv("CASIMIR_THREADS"); env && *env) {
      char *end = nullptr;
      const long n = std::strtol(env, &end, 10);
      if (*end != '\0' || n < 1 || n > 1024) throw ConfigError("CASIMIR_THREADS must be an integer in [1, 1024]");
      return static_cast<int>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
  }

  void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &body) {
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(n, 1));
    std::mutex mutex;
    std::size_t next = 0;
    auto work = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard lock(mutex);
          if (next >= n) return;
          i = next++;
        }
        try {
          body(i);
        } catch (...) { errors[i] = std::current_exception(); }
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto &t : pool) t.join();
    }
    for (auto &e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::string damping_label(const std::string &prefix, double D) { return prefix + "_D=" + format_exact(D); }

  namespace {

    std::string describe(double x, const std::string &curve, long n, long k_points, double err) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "x=%.6g curve=%s n_matsubara=%ld k_points=%ld est_rel_error=%.3g", x,
                    curve.c_str(), n, k_points, err);
      return buf;
    }

    /// Re-raises a convergence failure with the grid point and curve attached.
    template <class F> auto with_context(double x, const std::string &curve, F f) {
      try {
        return f();
      } catch (const ConvergenceError &e) {
        std::ostringstream msg;
        msg << e.what() << " [x = " << x << ", curve " << curve << "]";
        throw ConvergenceError(msg.str(), e.partial(), e.est_rel_error());
      }
    }

    struct Curve {
      std::string name;
      std::function<std::pair<double, std::string>(double x)> eval; // value, diagnostic
    };

    SweepResult run_sweep(const std::string &scenario, const std::string &x_label, const std::vector<double> &grid,
                          const std::vector<Curve> &curves, int threads) {
      SweepResult out;
      out.scenario = scenario;
      out.x_label = x_label;
      out.x = grid;
      for (const auto &c : curves) out.columns.push_back(c.name);
      out.rows.assign(grid.size(), std::vector<double>(curves.size()));
      std::vector<std::string> diag(grid.size() * curves.size());
      const std::size_t cells = grid.size() * curves.size();
      parallel_for(cells, resolve_threads(threads), [&](std::size_t cell) {
        const std::size_t i = cell / curves.size(), j = cell % curves.size();
        const auto &curve = curves[j];
        auto [value, note] = with_context(grid[i], curve.name, [&] { return curve.eval(grid[i]); });
        out.rows[i][j] = value;
        diag[cell] = std::move(note);
      });
      out.diagnostics = std::move(diag);
      return out;
    }

    void check_grid(const std::vector<double> &grid, const char *what) {
      if (grid.empty()) throw DomainError(std::string(what) + " grid is empty");
      for (double x : grid)
        if (!(x > 0) || !std::isfinite(x)) throw DomainError(std::string(what) + " grid values must be positive");
    }

  } // namespace

  SweepResult g1_curve(const std::vector<double> &d_grid, const LayerStack &stack, double T,
                       const std::vector<double> &D_list, Broadening broadening, const SweepOptions &opt) {
    check_grid(d_grid, "distance");
    if (!(T > 0)) throw DomainError("g1 needs T > 0");
    auto curve = [&](const std::string &name, ThermalSpec spec) {
      return Curve{name, [stack, spec, tol = opt.tol, name](double d) {
                     const auto p = pressure(stack.with_gap(d), spec, tol);
                     return std::pair{normalize_ideal(p.total, d),
                                      describe(d, name, p.n_matsubara_used, p.k_points, p.est_rel_error)};
                   }};
    };
    std::vector<Curve> curves{curve("zero_t", {0.0, 0.0, Evaluator::zero_t}),
                              curve("drude_T", {T, 0.0, Evaluator::matsubara})};
    for (double D : D_list) curves.push_back(curve(damping_label("saturated", D), {T, D, Evaluator::saturated, broadening}));
    auto out = run_sweep("g1", "d_m", d_grid, curves, opt.threads);

    // zero-T >= saturated(largest D) >= ... >= Drude(T) at every point.
    std::vector<std::size_t> order{1};
    std::vector<std::size_t> sat(D_list.size());
    for (std::size_t j = 0; j < sat.size(); ++j) sat[j] = 2 + j;
    std::stable_sort(sat.begin(), sat.end(), [&](std::size_t a, std::size_t b) { return D_list[a - 2] < D_list[b - 2]; });
    order.insert(order.end(), sat.begin(), sat.end());
    order.push_back(0);
    for (std::size_t i = 0; i < out.x.size(); ++i)
      for (std::size_t j = 0; j + 1 < order.size(); ++j)
        if (!(out.rows[i][order[j]] <= out.rows[i][order[j + 1]])) {
          std::ostringstream msg;
          msg << "ordering violated at d = " << out.x[i] << ": " << out.columns[order[j]] << " > "
              << out.columns[order[j + 1]];
          out.warnings.push_back(msg.str());
        }
    return out;
  }

  SweepResult g2_delta_force(const std::vector<double> &d_grid, const LayerStack &dark, const LayerStack &irradiated,
                             const SphereSpec &sphere, double T, const std::vector<double> &D_list,
                             const SweepOptions &opt) {
    check_grid(d_grid, "distance");
    if (!(sphere.radius > 0)) throw DomainError("sphere radius must be positive");
    if (!(T > 0)) throw DomainError("g2 needs T > 0");
    LayerStack prescription = dark;
    prescription.medium2 = dark.medium2.without_carriers();

    auto curve = [&](const std::string &name, const LayerStack &reference, ThermalSpec spec) {
      return Curve{name, [irradiated, reference, spec, sphere, tol = opt.tol, name](double d) {
                     const auto a = energy(irradiated.with_gap(d), spec, tol);
                     const auto b = energy(reference.with_gap(d), spec, tol);
                     const double delta = pfa_sphere_force(sphere, a.total) - pfa_sphere_force(sphere, b.total);
                     return std::pair{delta, describe(d, name, std::max(a.n_matsubara_used, b.n_matsubara_used),
                                                      a.k_points + b.k_points, a.est_rel_error + b.est_rel_error)};
                   }};
    };
    std::vector<Curve> curves{curve("delta_F_D=0", dark, {T, 0.0, Evaluator::matsubara})};
    for (double D : D_list)
      curves.push_back(curve(damping_label("delta_F", D), dark, {T, D, Evaluator::saturated, Broadening::zero_term}));
    curves.push_back(curve("delta_F_prescription", prescription, {T, 0.0, Evaluator::matsubara}));
    auto out = run_sweep("g2", "d_m", d_grid, curves, opt.threads);

    for (double d : d_grid)
      if (d / sphere.radius > 0.01) {
        std::ostringstream msg;
        msg << "proximity-force approximation used outside its range: d/R = " << d / sphere.radius << " at d = " << d;
        out.warnings.push_back(msg.str());
      }
    return out;
  }

  SweepResult g3_trap_shift(const std::vector<double> &z_grid, const DielectricModel &gap,
                            const DielectricModel &wall, const AtomSpec &atom, double T,
                            const std::vector<double> &D_list, const SweepOptions &opt) {
    check_grid(z_grid, "height");
    atom.validate();
    if (!(T > 0)) throw DomainError("g3 needs T > 0");
    const DielectricModel neglected = wall.is_ideal_metal() ? wall : wall.with_conductivity(0.0);

    auto curve = [&](const std::string &name, const DielectricModel &w, ThermalSpec spec) {
      return Curve{name, [gap, w, atom, spec, tol = opt.tol, name](double z) {
                     const auto r = atom_wall(gap, w, atom, z, spec, tol);
                     return std::pair{trap_shift(atom, r.curvature),
                                      describe(z, name, r.n_matsubara_used, r.k_points, r.est_rel_error)};
                   }};
    };
    std::vector<Curve> curves{curve("conductivity_included", wall, {T, 0.0, Evaluator::matsubara}),
                              curve("conductivity_neglected", neglected, {T, 0.0, Evaluator::matsubara})};
    for (double D : D_list)
      curves.push_back(curve(damping_label("saturated", D), wall, {T, D, Evaluator::saturated, Broadening::zero_term}));
    auto out = run_sweep("g3", "z_m", z_grid, curves, opt.threads);

    for (double z : z_grid) {
      // Linearization in the atomic response: corrections scale as alpha0 / z^3.
      const double estimate = atom.alpha0 / (z * z * z);
      if (estimate > 0.01) {
        std::ostringstream msg;
        msg << "rarefied-limit estimate alpha0/z^3 = " << estimate << " exceeds 1% at z = " << z;
        out.warnings.push_back(msg.str());
      }
    }
    return out;
  }

} // namespace casimir
