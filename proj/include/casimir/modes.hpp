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
#include "casimir/kernels.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

  /// Body 1 | gap | body 2, gap width d in metres.
  struct LayerStack {
    DielectricModel medium1;
    DielectricModel medium0 = DielectricModel::vacuum();
    DielectricModel medium2;
    double d = 1e-6;

    /// Throws DomainError unless d > 0 and finite, InvalidModelError if the gap is an ideal metal.
    void validate() const;
    LayerStack swapped() const { return {medium2, medium0, medium1, d}; }
    LayerStack with_gap(double gap) const { return {medium1, medium0, medium2, gap}; }
  };

  enum class Polarization { tm, te };

  inline constexpr Polarization polarizations[] = {Polarization::tm, Polarization::te};

  std::string to_string(Polarization pol);

  /// A point in the complex frequency plane. Points built with `imag` sit
  /// exactly on the imaginary axis and take the real-arithmetic path
  /// (including the symbolic xi = 0 limits).
  class Frequency {
  public:
    static Frequency imag(double xi);
    static Frequency real(double omega);
    static Frequency complex(std::complex<double> omega);

    bool on_imaginary_axis() const { return imaginary_axis_; }
    std::complex<double> omega() const { return omega_; }
    /// xi for points on the imaginary axis.
    double xi() const { return omega_.imag(); }

  private:
    std::complex<double> omega_{};
    bool imaginary_axis_ = false;
  };

  /// sqrt(k^2 - eps(w) w^2 / c^2) with Re >= 0, ties broken by Im <= 0. On the
  /// imaginary axis this is the real sqrt(k^2 + eps(i xi) xi^2 / c^2). The ideal
  /// metal has no propagating field inside; its gamma is reported as +inf.
  std::complex<double> gamma(const DielectricModel &model, double k, Frequency freq);

  /// Imaginary-axis shortcut for gamma.
  double gamma_imag(const DielectricModel &model, double k, double xi);

  /// Interface i -> j amplitudes. An ideal metal j gives 1 (TM) and -1 (TE).
  /// Throws SingularInterfaceError when the denominator vanishes.
  std::complex<double> fresnel_tm(const DielectricModel &mi, const DielectricModel &mj, double k, Frequency freq);
  std::complex<double> fresnel_te(const DielectricModel &mi, const DielectricModel &mj, double k, Frequency freq);
  std::complex<double> fresnel(Polarization pol, const DielectricModel &mi, const DielectricModel &mj, double k,
                               Frequency freq);

  /// f = 1 - exp(-2 gamma_0 d) r_01 r_02.
  std::complex<double> mode_condition(const LayerStack &stack, Polarization pol, double k, Frequency freq);

  /// Reduction of one gap|body interface at imaginary frequency to the
  /// coefficients consumed by the batched kernels.
  kernels::SideCoeffs side_coeffs(const ImagResponse &gap, const ImagResponse &body, bool body_is_ideal_metal);

  // ---------------------------------------------------------------- dispersion

  enum class ModeClass { propagating, evanescent };
  std::string to_string(ModeClass cls);

  struct DispersionPoint {
    double k = 0;     // 1/m
    double omega = 0; // rad/s
    Polarization channel = Polarization::tm;
    ModeClass cls = ModeClass::evanescent;
    int branch = 0;
  };

  struct DispersionOptions {
    int grid_points = 512;  // bracketing grid per k and per region
    double rel_tol = 1e-12; // bisection stopping width, relative
  };

  struct DispersionResult {
    std::vector<DispersionPoint> points;
    /// One line per k where a bracket could not be resolved.
    std::vector<std::string> diagnostics;
  };

  /// Real roots of f(k, w) = 0 for a lossless stack, below the lower edge of
  /// the bulk continuum of both bodies. Branch ids are assigned per channel by
  /// continuation along the (strictly increasing) k grid.
  DispersionResult dispersion_solve(const LayerStack &stack, Polarization pol, const std::vector<double> &k_grid,
                                    const DispersionOptions &opt = {});

  /// Lowest frequency at which either body supports a transverse bulk wave at
  /// in-plane wavenumber k; the search window ends here.
  double bulk_boundary(const LayerStack &stack, double k);

  /// Surface plasmon frequency w_p / sqrt(2) of the first body (plasma-like bodies only).
  double surface_plasmon_frequency(const DielectricModel &model);

  /// CSV with columns kd/pi, omega/omega_s, channel, class, branch.
  void write_dispersion_csv(std::ostream &out, const DispersionResult &result, double d, double omega_s);

} // namespace casimir
