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

#include <complex>
#include <string>
#include <vector>

namespace casimir {

  enum class MaterialKind { vacuum, ideal_metal, drude, plasma, lorentz_oscillators, composite };

  std::string to_string(MaterialKind kind);
  MaterialKind material_kind_from_string(const std::string &name);

  /// Damped harmonic oscillator s w_j^2 / (w_j^2 - w^2 - i g_j w). All rates in rad/s.
  struct Oscillator {
    double strength = 0;
    double resonance = 0;
    double width = 0;

    friend bool operator==(const Oscillator &, const Oscillator &) = default;
  };

  /// Free-carrier term -w_p^2 / (w (w + i nu)).
  struct DrudeTerm {
    double plasma = 0;
    double relaxation = 0;

    friend bool operator==(const DrudeTerm &, const DrudeTerm &) = default;
  };

  /// Permittivity on the imaginary axis, with the zero-frequency limit kept
  /// finite: `eps` may be +inf (metals at xi = 0, ideal metal everywhere) but
  /// `q = eps xi^2 / c^2` is always the finite limit. The bulk decay constant
  /// is then gamma_j = sqrt(k^2 + q).
  struct ImagResponse {
    double eps = 1;
    double q = 0;
  };

  /// Immutable permittivity model. Every kind is a special case of
  ///
  ///   eps(w) = eps_inf + sum_j osc_j(w) + sum_l drude_l(w) + 4 pi i sigma / w
  ///
  /// with sigma in s^-1 (Gaussian units); ideal metal is a separate flag.
  class DielectricModel {
  public:
    DielectricModel() = default;

    static DielectricModel vacuum();
    static DielectricModel ideal_metal();
    static DielectricModel drude(double plasma, double relaxation);
    static DielectricModel plasma(double plasma);
    static DielectricModel lorentz(double eps_inf, std::vector<Oscillator> oscillators);
    static DielectricModel composite(double eps_inf, std::vector<Oscillator> oscillators,
                                     std::vector<DrudeTerm> carriers, double conductivity);

    MaterialKind kind() const { return kind_; }
    bool is_ideal_metal() const { return kind_ == MaterialKind::ideal_metal; }
    double eps_inf() const { return eps_inf_; }
    const std::vector<Oscillator> &oscillators() const { return oscillators_; }
    const std::vector<DrudeTerm> &carriers() const { return carriers_; }
    double conductivity() const { return conductivity_; }
    bool neglects_intraband_dissipation() const { return neglect_intraband_dissipation_; }

    /// eps(i xi) for xi >= 0. Returns +inf at xi = 0 for models with a free
    /// carrier or conductivity term.
    double eval_imag(double xi) const;

    /// eps(w) for real w > 0.
    std::complex<double> eval_real(double omega) const;

    /// eps(w) anywhere in the closed upper half plane except w = 0.
    std::complex<double> eval_complex(std::complex<double> omega) const;

    /// Imaginary-axis response with the symbolic zero-frequency limits.
    ImagResponse response_imag(double xi) const;

    /// Relaxation of the intraband (Drude) terms set
    /// to zero, interband oscillator widths kept.
    DielectricModel with_dissipationless_intraband() const;

    /// Removes all free-carrier terms and the conductivity.
    DielectricModel without_carriers() const;

    DielectricModel with_conductivity(double sigma) const;

    /// True when eps is real on the real axis (no widths, relaxations or conductivity).
    bool is_dissipationless() const;

    /// Largest relaxation or oscillator width present, rad/s.
    double max_relaxation_rate() const;

    /// Squared plasma frequency summed over carrier terms.
    double total_plasma_frequency_squared() const;

    /// True when eps(i xi) diverges as xi -> 0.
    bool has_zero_frequency_divergence() const;

    friend bool operator==(const DielectricModel &, const DielectricModel &) = default;

  private:
    double effective_relaxation(const DrudeTerm &term) const {
      return neglect_intraband_dissipation_ ? 0.0 : term.relaxation;
    }
    void validate() const;

    MaterialKind kind_ = MaterialKind::vacuum;
    double eps_inf_ = 1.0;
    std::vector<Oscillator> oscillators_;
    std::vector<DrudeTerm> carriers_;
    double conductivity_ = 0.0;
    bool neglect_intraband_dissipation_ = false;
  };

} // namespace casimir
