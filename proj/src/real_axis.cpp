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

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

// Real-frequency evaluation of
//
//   V = (hbar / 2 pi^2) Im int_0^inf dw [n~(w) + 1/2] L(w),   L = sum_pol int k dk ln f(k, w).
//
// The integrand is analytic in the first quadrant (n~ has its poles at
// Re w = -D / hbar beta, or on the imaginary axis when D = 0), so the path is
// lifted to run at height eta above the real axis:
//
//   [0, i eta]            on the imaginary axis, where L is real and
//                         Re(n~ + 1/2) = sinh D / (2 (cosh D - cos hbar beta y))
//   [i eta, X + i eta]    parallel to the real axis
//   [X + i eta, X + i inf] vertical closure, where n~ is negligible
//
// With D = 0 and T > 0 the Bose pole at w = 0 sits on the corner; its quarter
// circle gives (pi/2) L(0) / hbar beta. eta is taken from the relaxation rates
// of the media and kept below half the first Matsubara frequency.

namespace casimir {

  namespace {

    using cplx = std::complex<double>;
    using Vec4 = spectral::Vec4;
    using Vec8 = quad::Vec<8>;

    /// ln(1 - x) without losing |x| << 1 to rounding.
    cplx log_one_minus(cplx x) {
      const cplx u = 1.0 - x;
      const cplx um1 = u - 1.0;
      if (um1 == 0.0) return -x;
      return std::log(u) * (-x) / um1;
    }

    struct Side {
      bool ideal = false;
      cplx eps = 1.0;
    };

    /// L(w) and its -d/dd counterpart (times d) at complex w, per polarization,
    /// as {Re E_tm, Im E_tm, Re E_te, Im E_te, Re P_tm, Im P_tm, Re P_te, Im P_te}.
    class ComplexSpectrum {
    public:
      ComplexSpectrum(const LayerStack &s, double k_rel, int max_panels, spectral::Stats &stats)
         : stack_(s), k_rel_(k_rel), max_panels_(max_panels), stats_(&stats) {}

      Vec8 operator()(cplx w) const {
        const double c = units::c, d = stack_.d;
        const cplx e0 = stack_.medium0.eval_complex(w);
        const Side s1{stack_.medium1.is_ideal_metal(), stack_.medium1.is_ideal_metal() ? 1.0 : stack_.medium1.eval_complex(w)};
        const Side s2{stack_.medium2.is_ideal_metal(), stack_.medium2.is_ideal_metal() ? 1.0 : stack_.medium2.eval_complex(w)};
        const cplx w2c2 = w * w / (c * c);

        auto branch = [](cplx g) {
          if (g.real() < 0) g = -g;
          if (g.real() == 0 && g.imag() > 0) g = -g;
          return g;
        };
        auto integrand = [&](double k) {
          const cplx g0 = branch(std::sqrt(k * k - e0 * w2c2));
          auto refl = [&](const Side &s, cplx &tm, cplx &te) {
            if (s.ideal) {
              tm = 1.0, te = -1.0;
              return;
            }
            const cplx gj = branch(std::sqrt(k * k - s.eps * w2c2));
            tm = (s.eps * g0 - e0 * gj) / (s.eps * g0 + e0 * gj);
            te = (g0 - gj) / (g0 + gj);
          };
          cplx tm1, te1, tm2, te2;
          refl(s1, tm1, te1);
          refl(s2, tm2, te2);
          const cplx decay = std::exp(-2.0 * g0 * d);
          const cplx x_tm = decay * tm1 * tm2, x_te = decay * te1 * te2;
          const cplx e_tm = k * log_one_minus(x_tm), e_te = k * log_one_minus(x_te);
          // -d/dd ln f = -2 gamma_0 X / (1 - X), times d for scaling.
          const cplx p_tm = -k * 2.0 * g0 * d * x_tm / (1.0 - x_tm);
          const cplx p_te = -k * 2.0 * g0 * d * x_te / (1.0 - x_te);
          return Vec8{e_tm.real(), e_tm.imag(), e_te.real(), e_te.imag(),
                      p_tm.real(), p_tm.imag(), p_te.real(), p_te.imag()};
        };

        const double k_light = std::abs(w.real()) / c;
        const double k_max = std::sqrt(std::pow(40.0 / d, 2) + std::norm(w) / (c * c));
        std::vector<double> interior{k_light, 0.5 * k_light, 1.5 * k_light, 1.0 / d, 5.0 / d, 15.0 / d};
        const auto breaks = quad::breakpoints(0.0, k_max, interior);
        quad::AdaptiveOptions opt;
        opt.rel_tol = k_rel_;
        opt.max_panels = max_panels_;
        const auto res = quad::integrate<8>(quad::pointwise_rule<8>(integrand), breaks, opt);
        stats_->k_points += res.evaluations * quad::panel_order;
        stats_->note(res.converged, res.error, quad::norm1(res.value));
        return res.value;
      }

    private:
      LayerStack stack_;
      double k_rel_;
      int max_panels_;
      spectral::Stats *stats_;
    };

    /// Picks Re or Im of (weight * L) per component.
    Vec4 project(const Vec8 &l, cplx weight, bool take_imag) {
      Vec4 out{};
      for (int i = 0; i < 4; ++i) {
        const cplx z = weight * cplx(l[2 * i], l[2 * i + 1]);
        out[i] = take_imag ? z.imag() : z.real();
      }
      return out;
    }

    cplx occupation_plus_half(cplx w, double hbar_beta, double D) {
      if (hbar_beta == 0) return 0.5;
      const cplx z = hbar_beta * w + D;
      if (z.real() > 700) return 0.5;
      return 1.0 / (std::exp(z) - 1.0) + 0.5;
    }

    void check(const quad::AdaptiveResult<4> &r, double tol, const char *segment, double d) {
      const double norm = quad::norm1(r.value);
      if (!r.converged && norm > 0 && r.error / norm > 10 * tol) {
        std::ostringstream msg;
        msg << "real-axis segment '" << segment << "' did not converge at d = " << d;
        throw ConvergenceError(msg.str(), r.value[0] + r.value[1], r.error / norm);
      }
    }

  } // namespace

  Evaluation evaluate_real_axis(const LayerStack &stack, const ThermalSpec &thermal, const Tolerances &tol) {
    stack.validate();
    ThermalSpec t = thermal;
    t.evaluator = Evaluator::real_axis;
    t.validate();

    const double d = stack.d, c = units::c;
    const double T = t.T, D = t.D;
    const double hb = units::hbar_beta(T); // 0 at T = 0
    const double xi1 = T > 0 ? units::matsubara_spacing(T) : std::numeric_limits<double>::infinity();

    double eta = 0;
    for (const auto *m : {&stack.medium0, &stack.medium1, &stack.medium2}) eta = std::max(eta, m->max_relaxation_rate());
    eta = std::max(eta, c / (50.0 * d));
    eta = std::min(eta, 0.5 * xi1);
    const double x_end = T > 0 ? 40.0 / hb : 2.0 * units::pi * c / d;
    const double y_end = eta + 40.0 * c / d;

    spectral::Stats stats;
    const spectral::PlateSpectrum plate(stack, {tol.k_rel, tol.max_panels}, stats);
    const ComplexSpectrum L(stack, tol.k_rel, tol.max_panels, stats);
    quad::AdaptiveOptions opt;
    opt.rel_tol = tol.real_axis_rel;
    opt.max_panels = tol.max_panels;

    Vec4 total{};
    double err = 0;
    auto add = [&](const quad::AdaptiveResult<4> &r, const char *segment) {
      check(r, tol.real_axis_rel, segment, d);
      total += r.value;
      err += r.error;
    };

    // Imaginary-axis piece: weight 1/2 at T = 0, the periodic Poisson kernel for D > 0, zero for D = 0.
    if (T == 0 || D > 0) {
      auto weight = [&](double y) {
        if (T == 0) return 0.5;
        return 0.5 * std::sinh(D) / (std::cosh(D) - std::cos(hb * y));
      };
      auto rule = quad::pointwise_rule<4>([&](double y) { return quad::scaled(plate(y), weight(y)); });
      const std::vector<double> b{0.0, eta};
      add(quad::integrate<4>(rule, b, opt), "imaginary axis");
    }
    if (T > 0 && D == 0) total += quad::scaled(plate(0.0), 0.5 * units::pi / hb);

    {
      auto rule = quad::pointwise_rule<4>([&](double x) {
        const cplx w(x, eta);
        return project(L(w), occupation_plus_half(w, hb, D), true);
      });
      std::vector<double> interior;
      for (double f : spectral::frequency_features({&stack.medium0, &stack.medium1, &stack.medium2}, d))
        interior.push_back(f);
      for (double f : {0.1, 0.25, 0.5}) interior.push_back(f * x_end);
      add(quad::integrate<4>(rule, quad::breakpoints(0.0, x_end, interior), opt), "horizontal");
    }
    {
      auto rule = quad::pointwise_rule<4>([&](double y) {
        const cplx w(x_end, y);
        return project(L(w), occupation_plus_half(w, hb, D), false);
      });
      std::vector<double> interior;
      for (double f : {0.05, 0.2, 1.0, 3.0, 8.0, 16.0}) interior.push_back(eta + f * c / d);
      add(quad::integrate<4>(rule, quad::breakpoints(eta, y_end, interior), opt), "vertical");
    }

    if (!stats.converged && stats.worst_rel_error > 10 * tol.k_rel) {
      std::ostringstream msg;
      msg << "complex k integral did not converge at d = " << d;
      throw ConvergenceError(msg.str(), 0.0, stats.worst_rel_error);
    }

    const double pref = units::hbar / (2.0 * units::pi * units::pi);
    Evaluation out;
    out.energy.tm = pref * total[0];
    out.energy.te = pref * total[1];
    out.pressure.tm = pref * total[2] / d;
    out.pressure.te = pref * total[3] / d;
    const double norm = quad::norm1(total);
    for (auto *b : {&out.energy, &out.pressure}) {
      b->total = b->tm + b->te;
      b->n_matsubara_used = 0;
      b->k_points = stats.k_points;
      b->est_rel_error = (norm > 0 ? err / norm : 0.0) + stats.worst_rel_error;
    }
    return out;
  }

} // namespace casimir
