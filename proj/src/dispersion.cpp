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
#include "casimir/modes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

// Real roots of the mode condition for lossless media.
//
// f itself has poles wherever a single-interface denominator vanishes, so the
// search runs on the pole-free numerator. With D_j, N_j the denominator and
// numerator of r_0j and e = exp(-2 gamma_0 d):
//
//   evanescent  (w < ck):  F = (D1 D2 - e N1 N2) / gamma_0            (real)
//   propagating (w > ck):  gamma_0 = -iq and N_j = -conj(D_j), so
//                          F = Im(exp(-iqd) D1 D2) / q                 (real)
//
// The 1/gamma_0 and 1/q factors remove the trivial zero on the light line.
// For identical bodies f factorizes into symmetric and antisymmetric parts,
// searched separately so that nearly degenerate pairs (the coupled surface
// plasmons at large kd) stay resolvable.

namespace casimir {

  namespace {

    using cplx = std::complex<double>;
    using Fn = std::function<double(double)>;

    struct Family {
      int id;
      Fn evanescent, propagating;
    };

    double real_eps(const DielectricModel &m, double omega) { return m.eval_real(omega).real(); }

    /// D_j at real frequency for the two channels; `g0` is gamma_0 (evanescent)
    /// or -iq (propagating).
    cplx denom(Polarization pol, double eps, cplx g0, double gj) {
      return pol == Polarization::tm ? eps * g0 + gj : g0 + gj;
    }
    cplx numer(Polarization pol, double eps, cplx g0, double gj) {
      return pol == Polarization::tm ? eps * g0 - gj : g0 - gj;
    }

    double body_gamma(const DielectricModel &m, double k, double omega) {
      const double arg = k * k - real_eps(m, omega) * omega * omega / (units::c * units::c);
      return std::sqrt(std::max(arg, 0.0));
    }

    std::vector<Family> families(const LayerStack &s, Polarization pol, double k) {
      const double c = units::c, d = s.d;
      auto g0_ev = [=](double w) { return std::sqrt(std::max(k * k - w * w / (c * c), 0.0)); };
      auto q_pr = [=](double w) { return std::sqrt(std::max(w * w / (c * c) - k * k, 0.0)); };

      if (s.medium1 == s.medium2) {
        const DielectricModel m = s.medium1;
        auto ev = [=](double w, double sign) {
          const double g0 = g0_ev(w), gj = body_gamma(m, k, w), eps = real_eps(m, w);
          const double e = std::exp(-g0 * d);
          return (denom(pol, eps, g0, gj).real() + sign * e * numer(pol, eps, g0, gj).real()) / g0;
        };
        auto pr = [=](double w, bool imag_part) {
          const double q = q_pr(w), gj = body_gamma(m, k, w), eps = real_eps(m, w);
          const cplx z = std::polar(1.0, -0.5 * q * d) * denom(pol, eps, cplx(0, -q), gj);
          return (imag_part ? z.imag() : z.real()) / q;
        };
        // (D - eN)(D + eN) and Im(..) Re(..) pair up as the two parities.
        return {{0, [=](double w) { return ev(w, -1.0); }, [=](double w) { return pr(w, false); }},
                {1, [=](double w) { return ev(w, +1.0); }, [=](double w) { return pr(w, true); }}};
      }

      const DielectricModel m1 = s.medium1, m2 = s.medium2;
      auto ev = [=](double w) {
        const double g0 = g0_ev(w);
        const double g1 = body_gamma(m1, k, w), g2 = body_gamma(m2, k, w);
        const double e1 = real_eps(m1, w), e2 = real_eps(m2, w);
        const double dd = (denom(pol, e1, g0, g1) * denom(pol, e2, g0, g2)).real();
        const double nn = (numer(pol, e1, g0, g1) * numer(pol, e2, g0, g2)).real();
        return (dd - std::exp(-2.0 * g0 * d) * nn) / g0;
      };
      auto pr = [=](double w) {
        const double q = q_pr(w);
        const double g1 = body_gamma(m1, k, w), g2 = body_gamma(m2, k, w);
        const double e1 = real_eps(m1, w), e2 = real_eps(m2, w);
        const cplx dd = denom(pol, e1, cplx(0, -q), g1) * denom(pol, e2, cplx(0, -q), g2);
        return (std::polar(1.0, -q * d) * dd).imag() / q;
      };
      return {{0, ev, pr}};
    }

    /// Lowest w > 0 with eps(w) w^2 = c^2 k^2 for one body.
    double bulk_edge(const DielectricModel &m, double k) {
      const double ck = units::c * k;
      auto g = [&](double w) { return real_eps(m, w) * w * w - ck * ck; };
      const double scale = std::sqrt(m.total_plasma_frequency_squared()) + ck;
      double lo = scale * 1e-9;
      const double ratio = std::pow(10.0, 1.0 / 200.0);
      for (double w = lo * ratio; w < scale * 1e4; lo = w, w *= ratio) {
        if (g(w) >= 0) {
          double a = lo, b = w;
          for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
            const double mid = 0.5 * (a + b);
            (g(mid) >= 0 ? b : a) = mid;
          }
          return 0.5 * (a + b);
        }
      }
      throw DomainError("no bulk transverse wave found below 1e4 times the plasma scale");
    }

    struct Root {
      double omega;
      ModeClass cls;
      int family;
    };

    /// Bracket sign changes of `fn` on a log-odds grid over (lo, hi) and bisect.
    void scan(const Fn &fn, double lo, double hi, ModeClass cls, int family, const DispersionOptions &opt,
              std::vector<Root> &roots, std::vector<std::string> &diag, double k) {
      if (!(hi > lo)) return;
      const int n = std::max(opt.grid_points, 8);
      const double s_max = 28.0;
      auto at = [&](int i) {
        const double s = -s_max + 2.0 * s_max * i / (n - 1);
        return lo + (hi - lo) / (1.0 + std::exp(-s));
      };
      double w_prev = at(0), f_prev = fn(w_prev);
      for (int i = 1; i < n; ++i) {
        const double w = at(i), f = fn(w);
        if (!std::isfinite(f) || !std::isfinite(f_prev)) {
          std::ostringstream msg;
          msg << "k=" << k << ": non-finite mode function near w=" << w;
          diag.push_back(msg.str());
        } else if ((f_prev < 0) != (f < 0) && f_prev != 0) {
          double a = w_prev, b = w, fa = f_prev;
          for (int it = 0; it < 400 && (b - a) > opt.rel_tol * b; ++it) {
            const double mid = 0.5 * (a + b), fm = fn(mid);
            if ((fm < 0) == (fa < 0)) {
              a = mid, fa = fm;
            } else {
              b = mid;
            }
          }
          if ((b - a) > opt.rel_tol * b * 2) {
            std::ostringstream msg;
            msg << "k=" << k << ": bisection stalled in [" << a << ", " << b << "]";
            diag.push_back(msg.str());
          }
          roots.push_back({0.5 * (a + b), cls, family});
        }
        w_prev = w, f_prev = f;
      }
    }

  } // namespace

  std::string to_string(ModeClass cls) { return cls == ModeClass::propagating ? "propagating" : "evanescent"; }

  double bulk_boundary(const LayerStack &stack, double k) {
    return std::min(bulk_edge(stack.medium1, k), bulk_edge(stack.medium2, k));
  }

  double surface_plasmon_frequency(const DielectricModel &model) {
    const double wp2 = model.total_plasma_frequency_squared();
    if (!(wp2 > 0)) throw DomainError("surface plasmon frequency needs a free-carrier term");
    return std::sqrt(wp2 / (model.eps_inf() + 1.0));
  }

  DispersionResult dispersion_solve(const LayerStack &stack, Polarization pol, const std::vector<double> &k_grid,
                                    const DispersionOptions &opt) {
    stack.validate();
    if (!(stack.medium0 == DielectricModel::vacuum())) throw DomainError("dispersion search assumes a vacuum gap");
    for (const auto *m : {&stack.medium1, &stack.medium2}) {
      if (m->is_ideal_metal()) throw DomainError("dispersion search needs bodies with a finite bulk boundary");
      if (!m->is_dissipationless()) throw DomainError("dispersion search needs dissipationless bodies");
    }
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
      if (!(k_grid[i] > 0)) throw DomainError("k grid must be positive");
      if (i > 0 && !(k_grid[i] > k_grid[i - 1])) throw DomainError("k grid must be strictly increasing");
    }

    DispersionResult result;
    struct Tracked {
      double omega;
      int family;
      int id;
    };
    std::vector<Tracked> previous;
    int next_id = 0;

    for (double k : k_grid) {
      const double ck = units::c * k;
      const double wb = bulk_boundary(stack, k);
      std::vector<Root> roots;
      for (const auto &fam : families(stack, pol, k)) {
        scan(fam.evanescent, 0.0, std::min(ck, wb), ModeClass::evanescent, fam.id, opt, roots, result.diagnostics,
             k);
        if (wb > ck) scan(fam.propagating, ck, wb, ModeClass::propagating, fam.id, opt, roots, result.diagnostics, k);
      }
      std::sort(roots.begin(), roots.end(), [](const Root &a, const Root &b) { return a.omega < b.omega; });

      // Continuation: closest pairs first, same parity family only.
      struct Pair {
        double dist;
        std::size_t now, before;
      };
      std::vector<Pair> pairs;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < previous.size(); ++j)
          if (roots[i].family == previous[j].family)
            pairs.push_back({std::abs(roots[i].omega - previous[j].omega) / previous[j].omega, i, j});
      std::sort(pairs.begin(), pairs.end(), [](const Pair &a, const Pair &b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.now != b.now ? a.now < b.now : a.before < b.before;
      });
      std::vector<int> ids(roots.size(), -1);
      std::vector<bool> used(previous.size(), false);
      for (const auto &p : pairs) {
        if (p.dist > 0.25 || ids[p.now] >= 0 || used[p.before]) continue;
        ids[p.now] = previous[p.before].id;
        used[p.before] = true;
      }
      std::vector<Tracked> current;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (ids[i] < 0) ids[i] = next_id++;
        current.push_back({roots[i].omega, roots[i].family, ids[i]});
        result.points.push_back({k, roots[i].omega, pol, roots[i].cls, ids[i]});
      }
      previous = std::move(current);
    }
    return result;
  }

  void write_dispersion_csv(std::ostream &out, const DispersionResult &result, double d, double omega_s) {
    out << "kd_over_pi,omega_over_omega_s,channel,class,branch\n";
    char buf[96];
    for (const auto &p : result.points) {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,", p.k * d / units::pi, p.omega / omega_s);
      out << buf << to_string(p.channel) << ',' << to_string(p.cls) << ',' << p.branch << '\n';
    }
  }

} // namespace casimir
