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

#include "casimir/dielectric.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace casimir {

  namespace {
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr double four_pi = 4.0 * units::pi;

    void require_finite(double value, const char *what) {
      if (!std::isfinite(value)) throw InvalidModelError(std::string("non-finite model parameter: ") + what);
    }
    void require_nonnegative(double value, const char *what) {
      require_finite(value, what);
      if (value < 0) throw InvalidModelError(std::string("negative model parameter: ") + what);
    }
  } // namespace

  std::string to_string(MaterialKind kind) {
    switch (kind) {
      case MaterialKind::vacuum: return "vacuum";
      case MaterialKind::ideal_metal: return "ideal-metal";
      case MaterialKind::drude: return "drude";
      case MaterialKind::plasma: return "plasma";
      case MaterialKind::lorentz_oscillators: return "lorentz-oscillators";
      case MaterialKind::composite: return "composite";
    }
    return "unknown";
  }

  MaterialKind material_kind_from_string(const std::string &name) {
    for (auto kind : {MaterialKind::vacuum, MaterialKind::ideal_metal, MaterialKind::drude, MaterialKind::plasma,
                      MaterialKind::lorentz_oscillators, MaterialKind::composite}) {
      if (to_string(kind) == name) return kind;
    }
    throw InvalidModelError("unknown material kind '" + name + "'");
  }

  DielectricModel DielectricModel::vacuum() { return {}; }

  DielectricModel DielectricModel::ideal_metal() {
    DielectricModel m;
    m.kind_ = MaterialKind::ideal_metal;
    return m;
  }

  DielectricModel DielectricModel::drude(double plasma, double relaxation) {
    DielectricModel m;
    m.kind_ = MaterialKind::drude;
    m.carriers_ = {{plasma, relaxation}};
    m.validate();
    return m;
  }

  DielectricModel DielectricModel::plasma(double plasma) {
    DielectricModel m;
    m.kind_ = MaterialKind::plasma;
    m.carriers_ = {{plasma, 0.0}};
    m.validate();
    return m;
  }

  DielectricModel DielectricModel::lorentz(double eps_inf, std::vector<Oscillator> oscillators) {
    DielectricModel m;
    m.kind_ = MaterialKind::lorentz_oscillators;
    m.eps_inf_ = eps_inf;
    m.oscillators_ = std::move(oscillators);
    m.validate();
    return m;
  }

  DielectricModel DielectricModel::composite(double eps_inf, std::vector<Oscillator> oscillators,
                                             std::vector<DrudeTerm> carriers, double conductivity) {
    DielectricModel m;
    m.kind_ = MaterialKind::composite;
    m.eps_inf_ = eps_inf;
    m.oscillators_ = std::move(oscillators);
    m.carriers_ = std::move(carriers);
    m.conductivity_ = conductivity;
    m.validate();
    return m;
  }

  void DielectricModel::validate() const {
    require_finite(eps_inf_, "eps_inf");
    if (eps_inf_ < 1.0) throw InvalidModelError("eps_inf must be >= 1 for a passive model");
    for (const auto &osc : oscillators_) {
      require_nonnegative(osc.strength, "oscillator strength");
      require_nonnegative(osc.width, "oscillator width");
      require_finite(osc.resonance, "oscillator resonance");
      if (osc.resonance <= 0) throw InvalidModelError("oscillator resonance must be positive");
    }
    for (const auto &term : carriers_) {
      require_nonnegative(term.plasma, "plasma frequency");
      require_nonnegative(term.relaxation, "relaxation rate");
    }
    require_nonnegative(conductivity_, "conductivity");
  }

  double DielectricModel::eval_imag(double xi) const {
    if (!(xi >= 0)) throw DomainError("eps(i xi) requires xi >= 0");
    if (is_ideal_metal()) return inf;
    double eps = eps_inf_;
    for (const auto &osc : oscillators_) {
      const double w2 = osc.resonance * osc.resonance;
      eps += osc.strength * w2 / (w2 + xi * xi + osc.width * xi);
    }
    if (xi == 0) return has_zero_frequency_divergence() ? inf : eps;
    for (const auto &term : carriers_) {
      eps += term.plasma * term.plasma / (xi * (xi + effective_relaxation(term)));
    }
    if (conductivity_ > 0) eps += four_pi * conductivity_ / xi;
    return eps;
  }

  std::complex<double> DielectricModel::eval_complex(std::complex<double> omega) const {
    using namespace std::complex_literals;
    if (omega == 0.0) throw DomainError("eps(w) is singular at w = 0");
    if (is_ideal_metal()) return {0.0, inf};
    std::complex<double> eps = eps_inf_;
    for (const auto &osc : oscillators_) {
      const double w2 = osc.resonance * osc.resonance;
      eps += osc.strength * w2 / (w2 - omega * omega - 1i * osc.width * omega);
    }
    for (const auto &term : carriers_) {
      eps -= term.plasma * term.plasma / (omega * (omega + 1i * effective_relaxation(term)));
    }
    if (conductivity_ > 0) eps += 1i * four_pi * conductivity_ / omega;
    return eps;
  }

  std::complex<double> DielectricModel::eval_real(double omega) const {
    if (!(omega > 0)) throw DomainError("eps(w) on the real axis requires w > 0");
    return eval_complex({omega, 0.0});
  }

  ImagResponse DielectricModel::response_imag(double xi) const {
    if (!(xi >= 0)) throw DomainError("eps(i xi) requires xi >= 0");
    if (is_ideal_metal()) return {inf, inf};
    constexpr double inv_c2 = 1.0 / (units::c * units::c);
    if (xi > 0) {
      const double eps = eval_imag(xi);
      // eps xi^2 assembled term by term so that xi -> 0 never forms inf * 0.
      double q = 0;
      double bound = eps_inf_;
      for (const auto &osc : oscillators_) {
        const double w2 = osc.resonance * osc.resonance;
        bound += osc.strength * w2 / (w2 + xi * xi + osc.width * xi);
      }
      q = bound * xi * xi;
      for (const auto &term : carriers_) {
        q += term.plasma * term.plasma * xi / (xi + effective_relaxation(term));
      }
      if (conductivity_ > 0) q += four_pi * conductivity_ * xi;
      return {eps, q * inv_c2};
    }
    // xi = 0: eps xi^2 -> sum of w_p^2 over undamped carrier terms.
    double q = 0;
    for (const auto &term : carriers_) {
      if (effective_relaxation(term) == 0) q += term.plasma * term.plasma;
    }
    return {eval_imag(0.0), q * inv_c2};
  }

  DielectricModel DielectricModel::with_dissipationless_intraband() const {
    DielectricModel m = *this;
    m.neglect_intraband_dissipation_ = true;
    return m;
  }

  DielectricModel DielectricModel::without_carriers() const {
    DielectricModel m = *this;
    m.carriers_.clear();
    m.conductivity_ = 0;
    if (m.kind_ == MaterialKind::drude || m.kind_ == MaterialKind::plasma) m.kind_ = MaterialKind::vacuum;
    if (m.kind_ == MaterialKind::composite) m.kind_ = MaterialKind::lorentz_oscillators;
    if (m.kind_ == MaterialKind::lorentz_oscillators && m.oscillators_.empty() && m.eps_inf_ == 1.0)
      m.kind_ = MaterialKind::vacuum;
    return m;
  }

  DielectricModel DielectricModel::with_conductivity(double sigma) const {
    if (is_ideal_metal()) throw InvalidModelError("ideal metal cannot carry a finite conductivity");
    DielectricModel m = *this;
    m.conductivity_ = sigma;
    if (sigma > 0) m.kind_ = MaterialKind::composite;
    m.validate();
    return m;
  }

  bool DielectricModel::is_dissipationless() const {
    if (conductivity_ > 0) return false;
    for (const auto &osc : oscillators_)
      if (osc.width > 0) return false;
    for (const auto &term : carriers_)
      if (effective_relaxation(term) > 0) return false;
    return true;
  }

  double DielectricModel::max_relaxation_rate() const {
    double rate = 0;
    for (const auto &osc : oscillators_) rate = std::max(rate, osc.width);
    for (const auto &term : carriers_) rate = std::max(rate, effective_relaxation(term));
    return rate;
  }

  double DielectricModel::total_plasma_frequency_squared() const {
    double sum = 0;
    for (const auto &term : carriers_) sum += term.plasma * term.plasma;
    return sum;
  }

  bool DielectricModel::has_zero_frequency_divergence() const {
    if (conductivity_ > 0) return true;
    return std::any_of(carriers_.begin(), carriers_.end(), [](const DrudeTerm &t) { return t.plasma > 0; });
  }

} // namespace casimir
