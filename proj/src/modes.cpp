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

#include "casimir/modes.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include <cmath>
#include <limits>

namespace casimir {

  namespace {
    constexpr double inf = std::numeric_limits<double>::infinity();
    using cplx = std::complex<double>;

    cplx branch(cplx g) {
      if (g.real() < 0) g = -g;
      if (g.real() == 0 && g.imag() > 0) g = -g;
      return g;
    }

    double checked_ratio(double num, double den) {
      if (den == 0) throw SingularInterfaceError("vanishing Fresnel denominator");
      return num / den;
    }

    cplx checked_ratio(cplx num, cplx den) {
      if (den == 0.0) throw SingularInterfaceError("vanishing Fresnel denominator");
      return num / den;
    }

    bool infinite_at_zero(const ImagResponse &r) { return std::isinf(r.eps); }
  } // namespace

  void LayerStack::validate() const {
    if (!(d > 0) || !std::isfinite(d)) throw DomainError("gap width d must be positive and finite");
    if (medium0.is_ideal_metal()) throw InvalidModelError("the gap medium cannot be an ideal metal");
  }

  std::string to_string(Polarization pol) { return pol == Polarization::tm ? "TM" : "TE"; }

  Frequency Frequency::imag(double xi) {
    if (!(xi >= 0)) throw DomainError("imaginary frequency requires xi >= 0");
    Frequency f;
    f.omega_ = {0.0, xi};
    f.imaginary_axis_ = true;
    return f;
  }

  Frequency Frequency::real(double omega) {
    if (!(omega > 0)) throw DomainError("real frequency requires w > 0");
    Frequency f;
    f.omega_ = {omega, 0.0};
    return f;
  }

  Frequency Frequency::complex(std::complex<double> omega) {
    if (omega.imag() < 0) throw DomainError("frequencies below the real axis are not supported");
    if (omega.real() == 0) return imag(omega.imag());
    Frequency f;
    f.omega_ = omega;
    return f;
  }

  double gamma_imag(const DielectricModel &model, double k, double xi) {
    if (!(k >= 0)) throw DomainError("gamma requires k >= 0");
    const ImagResponse r = model.response_imag(xi);
    return std::sqrt(k * k + r.q);
  }

  std::complex<double> gamma(const DielectricModel &model, double k, Frequency freq) {
    if (freq.on_imaginary_axis()) return gamma_imag(model, k, freq.xi());
    if (!(k >= 0)) throw DomainError("gamma requires k >= 0");
    if (model.is_ideal_metal()) return inf;
    const cplx w = freq.omega();
    const cplx eps = model.eval_complex(w);
    return branch(std::sqrt(k * k - eps * w * w / (units::c * units::c)));
  }

  std::complex<double> fresnel_tm(const DielectricModel &mi, const DielectricModel &mj, double k, Frequency freq) {
    if (mi.is_ideal_metal() && mj.is_ideal_metal()) return 0.0;
    if (mj.is_ideal_metal()) return 1.0;
    if (mi.is_ideal_metal()) return -1.0;
    if (freq.on_imaginary_axis()) {
      const ImagResponse ri = mi.response_imag(freq.xi()), rj = mj.response_imag(freq.xi());
      const double gi = std::sqrt(k * k + ri.q), gj = std::sqrt(k * k + rj.q);
      if (infinite_at_zero(ri) || infinite_at_zero(rj)) {
        if (infinite_at_zero(ri) && infinite_at_zero(rj))
          throw DomainError("TM amplitude between two conductors at zero frequency is not defined");
        return infinite_at_zero(rj) ? 1.0 : -1.0;
      }
      return checked_ratio(rj.eps * gi - ri.eps * gj, rj.eps * gi + ri.eps * gj);
    }
    const cplx ei = mi.eval_complex(freq.omega()), ej = mj.eval_complex(freq.omega());
    const cplx gi = gamma(mi, k, freq), gj = gamma(mj, k, freq);
    return checked_ratio(ej * gi - ei * gj, ej * gi + ei * gj);
  }

  std::complex<double> fresnel_te(const DielectricModel &mi, const DielectricModel &mj, double k, Frequency freq) {
    if (mi.is_ideal_metal() && mj.is_ideal_metal()) return 0.0;
    if (mj.is_ideal_metal()) return -1.0;
    if (mi.is_ideal_metal()) return 1.0;
    if (freq.on_imaginary_axis()) {
      const double gi = gamma_imag(mi, k, freq.xi()), gj = gamma_imag(mj, k, freq.xi());
      return checked_ratio(gi - gj, gi + gj);
    }
    const cplx gi = gamma(mi, k, freq), gj = gamma(mj, k, freq);
    return checked_ratio(gi - gj, gi + gj);
  }

  std::complex<double> fresnel(Polarization pol, const DielectricModel &mi, const DielectricModel &mj, double k,
                               Frequency freq) {
    return pol == Polarization::tm ? fresnel_tm(mi, mj, k, freq) : fresnel_te(mi, mj, k, freq);
  }

  std::complex<double> mode_condition(const LayerStack &stack, Polarization pol, double k, Frequency freq) {
    stack.validate();
    const cplx r1 = fresnel(pol, stack.medium0, stack.medium1, k, freq);
    const cplx r2 = fresnel(pol, stack.medium0, stack.medium2, k, freq);
    if (freq.on_imaginary_axis()) {
      const double g0 = gamma_imag(stack.medium0, k, freq.xi());
      return 1.0 - std::exp(-2.0 * g0 * stack.d) * (r1 * r2).real();
    }
    const cplx g0 = gamma(stack.medium0, k, freq);
    return 1.0 - std::exp(-2.0 * g0 * stack.d) * r1 * r2;
  }

  kernels::SideCoeffs side_coeffs(const ImagResponse &gap, const ImagResponse &body, bool body_is_ideal_metal) {
    if (std::isinf(gap.eps)) throw DomainError("the gap medium must have a finite permittivity");
    kernels::SideCoeffs s;
    if (body_is_ideal_metal) {
      s.tm_a = 1, s.tm_b = 0;
      s.te_a = 0, s.te_b = 1;
      return s;
    }
    if (std::isinf(body.eps)) {
      s.tm_a = 1, s.tm_b = 0;
    } else {
      s.tm_a = body.eps, s.tm_b = gap.eps;
    }
    s.te_a = 1, s.te_b = 1;
    s.dq = body.q - gap.q;
    return s;
  }

} // namespace casimir
