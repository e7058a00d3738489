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

#include "casimir/lifshitz.hpp"
#include "casimir/spectrum.hpp"

#include <functional>
#include <string>
#include <vector>

namespace casimir {

  /// |F| / (hbar c pi^2 / (240 d^4)).
  double normalize_ideal(double pressure, double d);

  struct SphereSpec {
    double radius = 100e-6; // m
  };

  /// Proximity-force sphere-plate force 2 pi R V(d), N.
  double pfa_sphere_force(const SphereSpec &sphere, double energy_per_area);
  /// dF_sphere/dd = -2 pi R P(d), N/m.
  double pfa_force_gradient(const SphereSpec &sphere, double plate_pressure);
  /// Plate pressure recovered from a sphere-plate force gradient.
  double pfa_plate_pressure(const SphereSpec &sphere, double force_gradient);

  /// Point atom with a single-oscillator polarizability.
  struct AtomSpec {
    double alpha0 = 4.73e-29;               // m^3, Rb static polarizability (Gaussian volume)
    double omega_a = 2.415e15;              // rad/s, effective resonance of the Rb D lines
    double mass = 86.909180527 * 1.66053906660e-27; // kg, 87Rb
    double trap_frequency = 2.0 * 3.14159265358979323846 * 229.0; // rad/s

    spectral::Polarizability polarizability() const { return {alpha0, omega_a}; }
    void validate() const;
  };

  struct AtomWallResult {
    double energy = 0, energy_tm = 0, energy_te = 0; // J
    double curvature = 0;                            // U'', J/m^2
    long n_matsubara_used = 0;
    long k_points = 0;
    double est_rel_error = 0;
  };

  /// Rarefied-limit free energy of a point atom at height z above a wall:
  ///   U = -k_B T sum'_n alpha(i xi_n) int k dk e^{-2 gamma_0 z} / gamma_0
  ///       [(2 gamma_0^2 - xi_n^2/c^2) r_TM - (xi_n^2/c^2) r_TE]
  /// with the matsubara or saturated evaluator (either broadening).
  AtomWallResult atom_wall(const DielectricModel &gap, const DielectricModel &wall, const AtomSpec &atom, double z,
                           const ThermalSpec &thermal, const Tolerances &tol = {});

  /// Fractional trap-frequency shift U''(z0) / (2 m w0^2).
  double trap_shift(const AtomSpec &atom, double curvature);

  struct SweepResult {
    std::string scenario;
    std::string x_label;
    std::vector<std::string> columns;
    std::vector<double> x;
    std::vector<std::vector<double>> rows; // rows[i][j] belongs to x[i], columns[j]
    std::vector<std::string> warnings;
    std::vector<std::string> diagnostics; // one convergence summary per grid point and curve

    std::vector<double> column(const std::string &name) const;
  };

  struct SweepOptions {
    Tolerances tol;
    /// Worker threads; 0 reads CASIMIR_THREADS and falls back to the hardware count.
    int threads = 0;
  };

  /// Threads a sweep will use for `requested` (0 = environment / hardware).
  int resolve_threads(int requested);

  /// Runs body(i) for i in [0, n) on `threads` workers. The first exception by
  /// index is rethrown after all workers finish.
  void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &body);

  /// Normalized gold-gold pressure: zero-T, Drude at T (D = 0), and the
  /// saturated evaluator for each D with the given broadening.
  SweepResult g1_curve(const std::vector<double> &d_grid, const LayerStack &stack, double T,
                       const std::vector<double> &D_list, Broadening broadening = Broadening::all_terms,
                       const SweepOptions &opt = {});

  /// Delta F = F_sphere(irradiated) - F_sphere(dark) for D = 0 and each D, plus
  /// the prescription curve where the dark membrane (medium2) has its carrier
  /// terms deleted.
  SweepResult g2_delta_force(const std::vector<double> &d_grid, const LayerStack &dark, const LayerStack &irradiated,
                             const SphereSpec &sphere, double T, const std::vector<double> &D_list,
                             const SweepOptions &opt = {});

  /// Fractional trap shift versus height for conductivity included (D = 0),
  /// conductivity neglected, and the saturated evaluator for each D.
  SweepResult g3_trap_shift(const std::vector<double> &z_grid, const DielectricModel &gap,
                            const DielectricModel &wall, const AtomSpec &atom, double T,
                            const std::vector<double> &D_list, const SweepOptions &opt = {});

  /// Column name used for a damping value, e.g. "saturated_D=0.01".
  std::string damping_label(const std::string &prefix, double D);

} // namespace casimir
