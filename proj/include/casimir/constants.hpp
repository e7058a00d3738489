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

#include <numbers>

namespace casimir::units {

  // CODATA 2018.
  inline constexpr double hbar = 1.054571817e-34;   // J s
  inline constexpr double c = 299792458.0;          // m / s
  inline constexpr double k_boltzmann = 1.380649e-23; // J / K
  inline constexpr double atomic_mass = 1.66053906660e-27; // kg

  /// Angular frequency of a 1 eV photon, e / hbar in rad/s. This is the only
  /// conversion between the eV values accepted at the config boundary and the
  /// rad/s values used everywhere else.
  inline constexpr double ev_to_rad_per_s = 1.519267447e15;

  inline constexpr double zeta3 = 1.2020569031595942854;
  inline constexpr double pi = std::numbers::pi;

  inline constexpr double from_ev(double ev) { return ev * ev_to_rad_per_s; }
  inline constexpr double to_ev(double rad_per_s) { return rad_per_s / ev_to_rad_per_s; }

  /// hbar * beta in seconds; zero at T = 0.
  inline constexpr double hbar_beta(double temperature) {
    return temperature > 0 ? hbar / (k_boltzmann * temperature) : 0.0;
  }

  /// First Matsubara frequency 2 pi k_B T / hbar.
  inline constexpr double matsubara_spacing(double temperature) {
    return 2.0 * pi * k_boltzmann * temperature / hbar;
  }

  /// hbar c pi^2 / (240 d^4): zero-temperature pressure between perfect mirrors.
  inline constexpr double ideal_pressure(double d) {
    return hbar * c * pi * pi / (240.0 * d * d * d * d);
  }

  /// pi^2 hbar c / (720 d^3): magnitude of the matching energy per area.
  inline constexpr double ideal_energy(double d) { return pi * pi * hbar * c / (720.0 * d * d * d); }

} // namespace casimir::units
