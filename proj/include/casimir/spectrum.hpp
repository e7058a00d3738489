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

#include "casimir/kernels.hpp"
#include "casimir/modes.hpp"
#include "casimir/quadrature.hpp"

#include <algorithm>
#include <functional>
#include <vector>

// Building blocks shared by the evaluators: the k-integrated spectrum at one
// imaginary frequency, and the frequency engines that sum or integrate it.

namespace casimir::spectral {

  /// {energy TM, energy TE, pressure TM, pressure TE} at one frequency. The
  /// pressure slots are multiplied by the length (d, or z for the atom, whose
  /// slots hold z^2 times the second z-derivative) so that all four entries
  /// share a scale and one relative tolerance controls them.
  using Vec4 = quad::Vec<4>;
  using Spectrum = std::function<Vec4(double xi)>;

  struct Budget {
    double rel_tol = 1e-10;
    int max_panels = 2000;
  };

  /// Bookkeeping shared by one evaluation (not thread-safe; one per evaluation).
  struct Stats {
    long k_points = 0;
    double worst_rel_error = 0; // largest relative error reported by any adaptive integral
    bool converged = true;

    void note(bool ok, double err, double scale) {
      converged = converged && ok;
      if (scale > 0) worst_rel_error = std::max(worst_rel_error, err / scale);
    }
  };

  /// sum_pol int_0^inf k dk ln f(k, i xi) and the matching -d/dd integral,
  /// via u = 2 d gamma_0 on the active SIMD kernels.
  class PlateSpectrum {
  public:
    PlateSpectrum(const LayerStack &stack, Budget budget, Stats &stats,
                  const kernels::KernelTable &table = kernels::active_kernels());
    Vec4 operator()(double xi) const;

  private:
    LayerStack stack_;
    Budget budget_;
    Stats *stats_;
    const kernels::KernelTable *table_;
  };

  /// Single-oscillator polarizability a0 / (1 + xi^2 / w_a^2), m^3.
  struct Polarizability {
    double alpha0 = 0;
    double omega_a = 1;
    double operator()(double xi) const { return alpha0 / (1.0 + (xi / omega_a) * (xi / omega_a)); }
  };

  /// alpha(i xi) int_0^inf k dk e^{-2 gamma_0 z} / gamma_0 [(2 gamma_0^2 - xi^2/c^2) r_TM - (xi^2/c^2) r_TE]
  /// split into TM/TE, with the second z-derivatives in the last two slots.
  class AtomSpectrum {
  public:
    AtomSpectrum(const DielectricModel &gap, const DielectricModel &wall, Polarizability alpha, double z,
                 Budget budget, Stats &stats, const kernels::KernelTable &table = kernels::active_kernels());
    Vec4 operator()(double xi) const;

  private:
    DielectricModel gap_, wall_;
    Polarizability alpha_;
    double z_;
    Budget budget_;
    Stats *stats_;
    const kernels::KernelTable *table_;
  };

  struct EngineResult {
    Vec4 value{};
    long terms = 0;           // Matsubara terms or periods used
    double est_rel_error = 0; // quadrature plus truncation estimate
  };

  struct SeriesControl {
    double tail_tol = 1e-8; // a term counts as negligible below tail_tol * |accumulated|
    int consecutive = 3;
    long max_terms = 100000;
    bool zero_only = false; // keep only n = 0
  };

  /// Characteristic frequencies at which a spectrum changes shape: the gap
  /// scale c/2d, relaxation rates and conductivity scales of the media.
  std::vector<double> frequency_features(const std::vector<const DielectricModel *> &media, double length);

  /// int_0^inf S(xi) dxi, integrated in t = xi / xi_scale on [0, t_max].
  EngineResult integrate_frequency(const Spectrum &S, double xi_scale, double t_max,
                                   const std::vector<double> &xi_features, Budget budget);

  /// Primed sum sum'_n S(xi_n), xi_n = n * spacing. The first `skip_zero` term
  /// is left out when the caller supplies its own n = 0 contribution.
  EngineResult matsubara_sum(const Spectrum &S, double spacing, const SeriesControl &ctl, bool skip_zero = false);

  /// (1/pi) int_0^{atan(xi_max / delta)} S(delta tan theta) dtheta: the n = 0
  /// term broadened into a Lorentzian of half-width delta, half weight
  /// included. With xi_max = inf the kernel has unit mass (times 1/2).
  EngineResult lorentz_zero_term(const Spectrum &S, double delta, double xi_max,
                                 const std::vector<double> &xi_features, Budget budget);

  /// sum'_n of every Matsubara term broadened into a Lorentzian of half-width
  /// D / (hbar beta). Evaluated period by period through the wrapped Lorentzian
  /// (1/2 pi) sinh D / (cosh D - cos x), x = hbar beta xi, whose per-period
  /// quantile map is x = 2 atan(tanh(D/2) tan(phi/2)) for uniform phi.
  EngineResult periodic_lorentz_sum(const Spectrum &S, double hbar_beta, double damping, const SeriesControl &ctl,
                                    Budget budget);

} // namespace casimir::spectral
