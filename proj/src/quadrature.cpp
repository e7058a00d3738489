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

#include "casimir/quadrature.hpp"

#include "casimir/constants.hpp"

#include <stdexcept>

namespace casimir::quad {

  GaussLegendreRule make_gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
      // Newton iteration on P_n from the Chebyshev-like initial guess.
      double z = std::cos(units::pi * (i + 0.75) / (order + 0.5));
      double dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < order; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        dp = order * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - z * z) * dp * dp);
      rule.nodes[i] = -z;
      rule.nodes[order - 1 - i] = z;
      rule.weights[i] = w;
      rule.weights[order - 1 - i] = w;
    }
    return rule;
  }

  const GaussLegendreRule &panel_rule() {
    static const GaussLegendreRule rule = make_gauss_legendre(panel_order);
    return rule;
  }

  std::vector<double> breakpoints(double lo, double hi, std::vector<double> interior) {
    std::vector<double> out{lo, hi};
    for (double x : interior)
      if (x > lo && x < hi && std::isfinite(x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<double> geometric(double lo, double hi, double ratio) {
    std::vector<double> out;
    if (!(lo > 0) || !(ratio > 1)) return out;
    for (double x = lo; x < hi; x *= ratio) out.push_back(x);
    return out;
  }

} // namespace casimir::quad
