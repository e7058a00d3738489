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

#include "casimir/kernels.hpp"

#include <cmath>

namespace casimir::kernels::scalar {

  namespace {
    // (a g0 - b gj) / (a g0 + b gj) with the numerator rewritten as
    // ((a^2 - b^2) g0^2 - b^2 dq) / (a g0 + b gj): no cancellation when r is small.
    inline double reflect(double a, double b, double dq, double g0, double g0sq, double gj) {
      const double den = a * g0 + b * gj;
      const double num = (a * a - b * b) * g0sq - b * b * dq;
      return num / (den * den);
    }
  } // namespace

  void plate(const PlateParams &p, const double *u, std::size_t n, const PlateOut &out) {
    const double inv_2d = 0.5 / p.gap, inv_d = 1.0 / p.gap;
    for (std::size_t i = 0; i < n; ++i) {
      const double g0 = u[i] * inv_2d;
      const double g0sq = g0 * g0;
      const double g1 = std::sqrt(g0sq + p.side1.dq);
      const double g2 = std::sqrt(g0sq + p.side2.dq);
      const double decay = std::exp(-u[i]);
      const double weight = u[i] * u[i] * inv_d;

      const double x_tm = decay * reflect(p.side1.tm_a, p.side1.tm_b, p.side1.dq, g0, g0sq, g1) *
                          reflect(p.side2.tm_a, p.side2.tm_b, p.side2.dq, g0, g0sq, g2);
      const double x_te = decay * reflect(p.side1.te_a, p.side1.te_b, p.side1.dq, g0, g0sq, g1) *
                          reflect(p.side2.te_a, p.side2.te_b, p.side2.dq, g0, g0sq, g2);
      const double f_tm = 1.0 - x_tm, f_te = 1.0 - x_te;
      out.energy_tm[i] = u[i] * std::log1p(-x_tm);
      out.energy_te[i] = u[i] * std::log1p(-x_te);
      out.pressure_tm[i] = -weight * x_tm / f_tm;
      out.pressure_te[i] = -weight * x_te / f_te;
    }
  }

  void atom(const AtomParams &p, const double *u, std::size_t n, const AtomOut &out) {
    const double inv_2z = 0.5 / p.height;
    for (std::size_t i = 0; i < n; ++i) {
      const double g0 = u[i] * inv_2z;
      const double g0sq = g0 * g0;
      const double gw = std::sqrt(g0sq + p.wall.dq);
      const double decay = std::exp(-u[i]);
      const double tm = decay * (2.0 * g0sq - p.s) * reflect(p.wall.tm_a, p.wall.tm_b, p.wall.dq, g0, g0sq, gw);
      const double te = -decay * p.s * reflect(p.wall.te_a, p.wall.te_b, p.wall.dq, g0, g0sq, gw);
      const double curv = 4.0 * g0sq;
      out.energy_tm[i] = tm;
      out.energy_te[i] = te;
      out.curvature_tm[i] = tm * curv;
      out.curvature_te[i] = te * curv;
    }
  }

} // namespace casimir::kernels::scalar
