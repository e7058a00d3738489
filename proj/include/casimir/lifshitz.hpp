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

#include "casimir/modes.hpp"

#include <string>

namespace casimir {

  enum class Evaluator { zero_t, matsubara, real_axis, saturated };

  std::string to_string(Evaluator e);
  Evaluator evaluator_from_string(const std::string &name);

  /// Which Matsubara terms the saturated evaluator broadens.
  enum class Broadening {
    zero_term, // n = 0 only; n >= 1 kept sharp
    all_terms,
  };

  std::string to_string(Broadening b);
  Broadening broadening_from_string(const std::string &name);

  struct ThermalSpec {
    double T = 0;   // kelvin
    double D = 0;   // damping parameter, dimensionless
    Evaluator evaluator = Evaluator::zero_t;
    Broadening broadening = Broadening::zero_term;

    /// Throws DomainError for combinations the evaluators do not define.
    void validate() const;
  };

  struct Tolerances {
    double k_rel = 1e-10;         // inner k (u) integrals
    double freq_rel = 1e-10;      // frequency integrals and Lorentzian quadrature
    double real_axis_rel = 1e-9;  // contour segments of the real-axis evaluator
    double series_tail = 1e-8;    // Matsubara truncation threshold
    long max_terms = 100000;
    int max_panels = 4000;
    bool zero_term_only = false;  // keep only n = 0 (classical limit studies)
  };

  /// Energy per area (J/m^2) or pressure (N/m^2), split by polarization.
  struct EnergyBreakdown {
    double total = 0, tm = 0, te = 0;
    long n_matsubara_used = 0;
    long k_points = 0;
    double est_rel_error = 0;
  };

  using PressureBreakdown = EnergyBreakdown;

  /// Energy and pressure from one pass over the spectrum.
  struct Evaluation {
    EnergyBreakdown energy;
    PressureBreakdown pressure;
  };

  /// [exp(hbar beta w + D) - 1]^-1. Throws DomainError at w = 0, D = 0.
  double damped_bose(double omega, double T, double D);

  EnergyBreakdown energy_zero_t(const LayerStack &stack, const Tolerances &tol = {});
  EnergyBreakdown energy_matsubara(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});
  EnergyBreakdown energy_real_axis(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});
  EnergyBreakdown energy_saturated(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});

  /// Dispatches on thermal.evaluator.
  EnergyBreakdown energy(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});

  /// F = -dV/dd from the differentiated integrand; attraction gives F < 0.
  PressureBreakdown pressure(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});

  /// Energy and pressure together (one spectrum pass).
  Evaluation evaluate(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});

  /// The real-axis evaluator on its own; also reached through evaluate().
  Evaluation evaluate_real_axis(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol = {});

} // namespace casimir
