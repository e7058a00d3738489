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

#include "casimir/spectrum.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace casimir::spectral {

  namespace {

    constexpr int nodes = quad::panel_order;
    constexpr double u_span = 60.0;

    std::vector<double> u_breaks(double u0, std::initializer_list<double> extra) {
      std::vector<double> interior;
      for (double b : {1e-3, 0.05, 0.5, 3.0, 10.0, 25.0}) interior.push_back(u0 + b);
      for (double e : extra)
        if (std::isfinite(e)) interior.push_back(e);
      return quad::breakpoints(u0, u0 + u_span, interior);
    }

    /// Panel rule feeding 16 nodes at a time to a batched kernel. `scale_hi`
    /// multiplies the two derivative slots.
    template <class Run> auto batched_rule(Run run, double scale_hi, Stats *stats) {
      return [=](double a, double b) {
        const auto &gl = quad::panel_rule();
        alignas(32) double u[nodes], o0[nodes], o1[nodes], o2[nodes], o3[nodes];
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (int i = 0; i < nodes; ++i) u[i] = mid + half * gl.nodes[i];
        run(u, o0, o1, o2, o3);
        Vec4 s{};
        for (int i = 0; i < nodes; ++i) {
          const double w = gl.weights[i];
          s[0] += w * o0[i];
          s[1] += w * o1[i];
          s[2] += w * o2[i];
          s[3] += w * o3[i];
        }
        stats->k_points += nodes;
        s[2] *= scale_hi;
        s[3] *= scale_hi;
        return quad::scaled(s, half);
      };
    }

    quad::AdaptiveOptions options(const Budget &b) {
      quad::AdaptiveOptions opt;
      opt.rel_tol = b.rel_tol;
      opt.max_panels = b.max_panels;
      return opt;
    }

    double sum_norm(const Vec4 &v) { return quad::norm1(v); }

  } // namespace

  PlateSpectrum::PlateSpectrum(const LayerStack &stack, Budget budget, Stats &stats,
                               const kernels::KernelTable &table)
     : stack_(stack), budget_(budget), stats_(&stats), table_(&table) {
    stack_.validate();
  }

  Vec4 PlateSpectrum::operator()(double xi) const {
    const ImagResponse r0 = stack_.medium0.response_imag(xi);
    const ImagResponse r1 = stack_.medium1.response_imag(xi);
    const ImagResponse r2 = stack_.medium2.response_imag(xi);
    kernels::PlateParams p;
    p.side1 = side_coeffs(r0, r1, stack_.medium1.is_ideal_metal());
    p.side2 = side_coeffs(r0, r2, stack_.medium2.is_ideal_metal());
    p.gap = stack_.d;
    const double d = stack_.d;
    const double u0 = 2.0 * d * std::sqrt(r0.q);
    const auto breaks = u_breaks(u0, {2.0 * d * std::sqrt(r0.q + p.side1.dq), 2.0 * d * std::sqrt(r0.q + p.side2.dq)});

    const auto *table = table_;
    auto rule = batched_rule(
       [&p, table](const double *u, double *e_tm, double *e_te, double *p_tm, double *p_te) {
         table->plate(p, u, nodes, {e_tm, e_te, p_tm, p_te});
       },
       d, stats_);
    const auto res = quad::integrate<4>(rule, breaks, options(budget_));
    stats_->note(res.converged, res.error, sum_norm(res.value));
    return quad::scaled(res.value, 1.0 / (4.0 * d * d));
  }

  AtomSpectrum::AtomSpectrum(const DielectricModel &gap, const DielectricModel &wall, Polarizability alpha, double z,
                             Budget budget, Stats &stats, const kernels::KernelTable &table)
     : gap_(gap), wall_(wall), alpha_(alpha), z_(z), budget_(budget), stats_(&stats), table_(&table) {
    if (!(z > 0) || !std::isfinite(z)) throw DomainError("atom-wall distance must be positive and finite");
    if (gap.is_ideal_metal()) throw InvalidModelError("the gap medium cannot be an ideal metal");
  }

  Vec4 AtomSpectrum::operator()(double xi) const {
    const double a = alpha_(xi);
    if (a == 0) return Vec4{};
    const ImagResponse r0 = gap_.response_imag(xi);
    const ImagResponse rw = wall_.response_imag(xi);
    kernels::AtomParams p;
    p.wall = side_coeffs(r0, rw, wall_.is_ideal_metal());
    p.s = r0.q;
    p.height = z_;
    const double z = z_;
    const double u0 = 2.0 * z * std::sqrt(r0.q);
    const auto breaks = u_breaks(u0, {2.0 * z * std::sqrt(r0.q + p.wall.dq)});

    const auto *table = table_;
    auto rule = batched_rule(
       [&p, table](const double *u, double *e_tm, double *e_te, double *c_tm, double *c_te) {
         table->atom(p, u, nodes, {e_tm, e_te, c_tm, c_te});
       },
       z * z, stats_);
    const auto res = quad::integrate<4>(rule, breaks, options(budget_));
    stats_->note(res.converged, res.error, sum_norm(res.value));
    return quad::scaled(res.value, a / (2.0 * z));
  }

  std::vector<double> frequency_features(const std::vector<const DielectricModel *> &media, double length) {
    std::vector<double> out;
    const double base = units::c / (2.0 * length);
    for (double f : {0.1, 1.0, 10.0}) out.push_back(f * base);
    for (const auto *m : media) {
      if (m->is_ideal_metal()) continue;
      for (const auto &o : m->oscillators()) {
        if (o.width > 0) out.push_back(o.width);
        out.push_back(o.resonance);
      }
      for (const auto &t : m->carriers()) {
        if (t.relaxation > 0 && !m->neglects_intraband_dissipation()) out.push_back(t.relaxation);
      }
      if (m->conductivity() > 0) {
        // 4 pi sigma / xi equals the static bound permittivity here.
        const double eps_static = m->eval_imag(0.0);
        const double bound = std::isfinite(eps_static) ? eps_static : m->eps_inf();
        out.push_back(4.0 * units::pi * m->conductivity() / (bound + 1.0));
      }
    }
    return out;
  }

  EngineResult integrate_frequency(const Spectrum &S, double xi_scale, double t_max,
                                   const std::vector<double> &xi_features, Budget budget) {
    std::vector<double> interior{0.05, 0.5, 2.0, 5.0, 10.0, 20.0, 40.0};
    for (double f : xi_features) interior.push_back(f / xi_scale);
    const auto breaks = quad::breakpoints(0.0, t_max, interior);
    auto rule = quad::pointwise_rule<4>([&](double t) { return S(t * xi_scale); });
    const auto res = quad::integrate<4>(rule, breaks, options(budget));
    EngineResult out;
    out.value = quad::scaled(res.value, xi_scale);
    out.terms = res.evaluations;
    const double norm = sum_norm(res.value);
    out.est_rel_error = norm > 0 ? res.error / norm : 0.0;
    if (!res.converged && out.est_rel_error > 10 * budget.rel_tol) {
      std::ostringstream msg;
      msg << "frequency integral did not converge (estimated relative error " << out.est_rel_error << ")";
      throw ConvergenceError(msg.str(), out.value[0] + out.value[1], out.est_rel_error);
    }
    return out;
  }

  namespace {

    /// Accumulates sum_n term(n) from n = first until the control says stop.
    template <class Term> EngineResult run_series(Term term, long first, const SeriesControl &ctl, const char *what) {
      EngineResult out;
      int quiet = 0;
      double last_ratio = 0;
      for (long n = first;; ++n) {
        if (n >= ctl.max_terms) {
          std::ostringstream msg;
          msg << what << ": no convergence after " << ctl.max_terms << " terms";
          throw ConvergenceError(msg.str(), out.value[0] + out.value[1], last_ratio);
        }
        const Vec4 t = term(n);
        out.value += t;
        ++out.terms;
        const double acc = sum_norm(out.value);
        last_ratio = acc > 0 ? sum_norm(t) / acc : 0.0;
        quiet = (last_ratio <= ctl.tail_tol) ? quiet + 1 : 0;
        if (quiet >= ctl.consecutive) break;
      }
      out.est_rel_error = last_ratio;
      return out;
    }

  } // namespace

  EngineResult matsubara_sum(const Spectrum &S, double spacing, const SeriesControl &ctl, bool skip_zero) {
    if (!(spacing > 0)) throw DomainError("Matsubara spacing must be positive");
    if (ctl.zero_only) {
      EngineResult out;
      if (!skip_zero) {
        out.value = quad::scaled(S(0.0), 0.5);
        out.terms = 1;
      }
      return out;
    }
    return run_series(
       [&](long n) {
         if (n == 0) return quad::scaled(S(0.0), 0.5);
         return S(static_cast<double>(n) * spacing);
       },
       skip_zero ? 1 : 0, ctl, "Matsubara sum");
  }

  EngineResult lorentz_zero_term(const Spectrum &S, double delta, double xi_max,
                                 const std::vector<double> &xi_features, Budget budget) {
    EngineResult out;
    out.terms = 1;
    if (!(delta >= 0)) throw DomainError("Lorentzian width must be non-negative");
    if (delta == 0) {
      out.value = quad::scaled(S(0.0), 0.5);
      return out;
    }
    // psi = pi/2 - theta, xi = delta / tan(psi): keeps full precision where xi is large.
    const double psi_min = std::isinf(xi_max) ? 0.0 : std::atan(delta / xi_max);
    std::vector<double> interior;
    for (double f : xi_features) interior.push_back(std::atan(delta / f));
    for (double f : {1e-3, 1e-2, 0.1, 1.0, 10.0}) interior.push_back(std::atan(1.0 / f)); // xi = f delta
    const auto breaks = quad::breakpoints(psi_min, 0.5 * units::pi, interior);
    auto rule = quad::pointwise_rule<4>([&](double psi) { return S(delta / std::tan(psi)); });
    const auto res = quad::integrate<4>(rule, breaks, options(budget));
    out.value = quad::scaled(res.value, 1.0 / units::pi);
    const double norm = sum_norm(res.value);
    out.est_rel_error = norm > 0 ? res.error / norm : 0.0;
    if (!res.converged && out.est_rel_error > 10 * budget.rel_tol) {
      std::ostringstream msg;
      msg << "Lorentzian quadrature did not converge (estimated relative error " << out.est_rel_error << ")";
      throw ConvergenceError(msg.str(), out.value[0] + out.value[1], out.est_rel_error);
    }
    return out;
  }

  EngineResult periodic_lorentz_sum(const Spectrum &S, double hbar_beta, double damping, const SeriesControl &ctl,
                                    Budget budget) {
    if (!(hbar_beta > 0)) throw DomainError("periodic broadening needs T > 0");
    if (!(damping >= 0)) throw DomainError("damping parameter must be non-negative");
    if (damping == 0) return matsubara_sum(S, 2.0 * units::pi / hbar_beta, ctl);

    const double rho = std::tanh(0.5 * damping);
    constexpr double pi = units::pi;
    // Each period is split at phi = pi/2: the inner half uses phi, the outer
    // half psi = pi - phi so that x near +-pi is resolved without cancellation.
    auto x_inner = [rho](double phi) { return 2.0 * std::atan(rho * std::tan(0.5 * phi)); };
    auto x_outer = [rho](double psi) { return 2.0 * std::atan(rho / std::tan(0.5 * psi)); };
    std::vector<double> inner_breaks, outer_breaks;
    for (double frac : {1.0 / 64, 1.0 / 16, 0.125, 0.25, 0.375}) {
      const double phi = 2.0 * std::atan(std::tan(0.5 * frac * pi) / rho);
      if (phi < 0.5 * pi) inner_breaks.push_back(phi);
    }
    for (double frac : {0.5, 0.625, 0.75, 0.875, 15.0 / 16, 63.0 / 64}) {
      const double psi = 2.0 * std::atan(rho / std::tan(0.5 * frac * pi));
      if (psi < 0.5 * pi) outer_breaks.push_back(psi);
    }
    const auto ib = quad::breakpoints(0.0, 0.5 * pi, inner_breaks);
    const auto ob = quad::breakpoints(0.0, 0.5 * pi, outer_breaks);
    double worst = 0;

    auto period = [&](long n) {
      const double centre = 2.0 * pi * static_cast<double>(n);
      auto eval = [&](double x) {
        Vec4 v = S((centre + x) / hbar_beta);
        if (n > 0) v += S((centre - x) / hbar_beta);
        return v;
      };
      auto inner = quad::pointwise_rule<4>([&](double phi) { return eval(x_inner(phi)); });
      auto outer = quad::pointwise_rule<4>([&](double psi) { return eval(x_outer(psi)); });
      const auto ri = quad::integrate<4>(inner, ib, options(budget));
      const auto ro = quad::integrate<4>(outer, ob, options(budget));
      const Vec4 total = ri.value + ro.value;
      const double norm = sum_norm(total);
      if (norm > 0) worst = std::max(worst, (ri.error + ro.error) / norm);
      if ((!ri.converged || !ro.converged) && norm > 0 && (ri.error + ro.error) / norm > 10 * budget.rel_tol) {
        std::ostringstream msg;
        msg << "broadened Matsubara period " << n << " did not converge";
        throw ConvergenceError(msg.str(), total[0] + total[1], (ri.error + ro.error) / norm);
      }
      return quad::scaled(total, 1.0 / (2.0 * pi));
    };

    if (ctl.zero_only) {
      EngineResult out;
      out.value = period(0);
      out.terms = 1;
      out.est_rel_error = worst;
      return out;
    }
    EngineResult out = run_series(period, 0, ctl, "broadened Matsubara sum");
    out.est_rel_error += worst;
    return out;
  }

} // namespace casimir::spectral
