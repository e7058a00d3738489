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

#include "casimir/lifshitz.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace casimir {

  std::string to_string(Evaluator e) {
    switch (e) {
      case Evaluator::zero_t: return "zero-t";
      case Evaluator::matsubara: return "matsubara";
      case Evaluator::real_axis: return "real-axis";
      case Evaluator::saturated: return "saturated";
    }
    return "unknown";
  }

  Evaluator evaluator_from_string(const std::string &name) {
    for (auto e : {Evaluator::zero_t, Evaluator::matsubara, Evaluator::real_axis, Evaluator::saturated})
      if (to_string(e) == name) return e;
    throw ConfigError("unknown evaluator '" + name + "' (zero-t, matsubara, real-axis, saturated)");
  }

  std::string to_string(Broadening b) { return b == Broadening::zero_term ? "zero-term" : "all-terms"; }

  Broadening broadening_from_string(const std::string &name) {
    if (name == "zero-term") return Broadening::zero_term;
    if (name == "all-terms") return Broadening::all_terms;
    throw ConfigError("unknown broadening '" + name + "' (zero-term, all-terms)");
  }

  void ThermalSpec::validate() const {
    if (!(T >= 0) || !std::isfinite(T)) throw DomainError("temperature must be finite and >= 0");
    if (!(D >= 0) || !std::isfinite(D)) throw DomainError("damping parameter must be finite and >= 0");
    switch (evaluator) {
      case Evaluator::zero_t:
        if (T != 0) throw DomainError("the zero-t evaluator needs T = 0");
        if (D != 0) throw DomainError("the zero-t evaluator has no damping parameter");
        break;
      case Evaluator::matsubara:
        if (!(T > 0)) throw DomainError("the matsubara evaluator needs T > 0");
        if (D != 0) throw DomainError("the matsubara evaluator has no damping parameter; use saturated");
        break;
      case Evaluator::saturated:
        if (!(T > 0)) throw DomainError("the saturated evaluator needs T > 0");
        break;
      case Evaluator::real_axis: break;
    }
  }

  double damped_bose(double omega, double T, double D) {
    if (!(omega >= 0)) throw DomainError("damped_bose requires w >= 0");
    if (!(T >= 0) || !(D >= 0)) throw DomainError("damped_bose requires T >= 0 and D >= 0");
    if (T == 0) {
      if (omega == 0 && D == 0) throw DomainError("occupation diverges at w = 0, D = 0");
      return 0.0;
    }
    const double x = units::hbar_beta(T) * omega + D;
    if (x == 0) throw DomainError("occupation diverges at w = 0, D = 0");
    return 1.0 / std::expm1(x);
  }

  namespace {

    Evaluation assemble(const spectral::Vec4 &v, double prefactor, double d, long terms,
                        const spectral::Stats &stats, double engine_error, double k_tol) {
      if (!stats.converged && stats.worst_rel_error > 10 * k_tol) {
        std::ostringstream msg;
        msg << "k integral did not converge at d = " << d << " (estimated relative error " << stats.worst_rel_error
            << ")";
        throw ConvergenceError(msg.str(), prefactor * (v[0] + v[1]), stats.worst_rel_error);
      }
      Evaluation out;
      out.energy.tm = prefactor * v[0];
      out.energy.te = prefactor * v[1];
      out.pressure.tm = prefactor * v[2] / d;
      out.pressure.te = prefactor * v[3] / d;
      for (auto *b : {&out.energy, &out.pressure}) {
        b->total = b->tm + b->te;
        b->n_matsubara_used = terms;
        b->k_points = stats.k_points;
        b->est_rel_error = engine_error + stats.worst_rel_error;
      }
      return out;
    }

  } // namespace

  Evaluation evaluate(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    stack.validate();
    thermal.validate();
    if (thermal.evaluator == Evaluator::real_axis) return evaluate_real_axis(stack, thermal, tol);

    spectral::Stats stats;
    const spectral::PlateSpectrum plate(stack, {tol.k_rel, tol.max_panels}, stats);
    const spectral::Spectrum S = [&plate](double xi) { return plate(xi); };
    const auto features = spectral::frequency_features({&stack.medium0, &stack.medium1, &stack.medium2}, stack.d);
    const spectral::Budget freq_budget{tol.freq_rel, tol.max_panels};
    const spectral::SeriesControl ctl{tol.series_tail, 3, tol.max_terms, tol.zero_term_only};
    const double xi_scale = units::c / (2.0 * stack.d);
    constexpr double t_max = 80.0;

    if (thermal.evaluator == Evaluator::zero_t) {
      const auto r = spectral::integrate_frequency(S, xi_scale, t_max, features, freq_budget);
      const double pref = units::hbar / (4.0 * units::pi * units::pi);
      return assemble(r.value, pref, stack.d, 0, stats, r.est_rel_error, tol.k_rel);
    }

    const double pref = units::k_boltzmann * thermal.T / (2.0 * units::pi);
    const double spacing = units::matsubara_spacing(thermal.T);
    if (thermal.evaluator == Evaluator::matsubara) {
      const auto r = spectral::matsubara_sum(S, spacing, ctl);
      return assemble(r.value, pref, stack.d, r.terms, stats, r.est_rel_error, tol.k_rel);
    }

    // saturated
    if (thermal.broadening == Broadening::all_terms) {
      const auto r = spectral::periodic_lorentz_sum(S, units::hbar_beta(thermal.T), thermal.D, ctl, freq_budget);
      return assemble(r.value, pref, stack.d, r.terms, stats, r.est_rel_error, tol.k_rel);
    }
    const double delta = thermal.D / units::hbar_beta(thermal.T);
    const auto zero = spectral::lorentz_zero_term(S, delta, t_max * xi_scale, features, freq_budget);
    const auto rest = spectral::matsubara_sum(S, spacing, ctl, /*skip_zero=*/true);
    return assemble(zero.value + rest.value, pref, stack.d, rest.terms + 1, stats,
                    zero.est_rel_error + rest.est_rel_error, tol.k_rel);
  }

  EnergyBreakdown energy_zero_t(const LayerStack &stack, const Tolerances &tol) {
    return evaluate(stack, {0.0, 0.0, Evaluator::zero_t}, tol).energy;
  }

  EnergyBreakdown energy_matsubara(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    ThermalSpec t = thermal;
    t.evaluator = Evaluator::matsubara;
    return evaluate(stack, t, tol).energy;
  }

  EnergyBreakdown energy_real_axis(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    ThermalSpec t = thermal;
    t.evaluator = Evaluator::real_axis;
    return evaluate(stack, t, tol).energy;
  }

  EnergyBreakdown energy_saturated(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    ThermalSpec t = thermal;
    t.evaluator = Evaluator::saturated;
    return evaluate(stack, t, tol).energy;
  }

  EnergyBreakdown energy(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    return evaluate(stack, thermal, tol).energy;
  }

  PressureBreakdown pressure(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    return evaluate(stack, thermal, tol).pressure;
  }

} // namespace casimir
