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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <utility>
#include <span>
#include <vector>

namespace casimir::quad {

  /// Gauss-Legendre rule on [-1, 1].
  struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
  };

  GaussLegendreRule make_gauss_legendre(int order);

  /// Order used by every panel integrator in the library. A multiple of the
  /// SIMD width so kernel batches have no scalar tail.
  inline constexpr int panel_order = 16;

  /// The shared panel_order rule.
  const GaussLegendreRule &panel_rule();

  /// Fixed-size vector of integrand components. A distinct type (rather than
  /// an alias of std::array) so the arithmetic below is found by ADL.
  template <std::size_t M> struct Vec : std::array<double, M> {};

  template <std::size_t M> Vec<M> &operator+=(Vec<M> &a, const Vec<M> &b) {
    for (std::size_t i = 0; i < M; ++i) a[i] += b[i];
    return a;
  }

  template <std::size_t M> Vec<M> operator+(Vec<M> a, const Vec<M> &b) { return a += b; }

  template <std::size_t M> Vec<M> scaled(Vec<M> a, double s) {
    for (auto &x : a) x *= s;
    return a;
  }

  template <std::size_t M> double norm1(const Vec<M> &a) {
    double s = 0;
    for (double x : a) s += std::abs(x);
    return s;
  }

  struct AdaptiveOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_panels = 2000;
  };

  template <std::size_t M> struct AdaptiveResult {
    Vec<M> value{};
    double error = 0;
    int panels = 0;
    long evaluations = 0;
    bool converged = true;
  };

  /// Globally adaptive panel integration. `rule(a, b)` returns a fixed-order
  /// estimate of the integral over [a, b]. Each panel carries the estimate
  /// from its two halves and the error |whole - halves|; the panel with the
  /// largest error is bisected until the summed error meets
  /// max(abs_tol, rel_tol * |value|_1). Panels are summed in increasing order
  /// of their left edge, so the result does not depend on refinement order.
  template <std::size_t M, class PanelRule>
  AdaptiveResult<M> integrate(PanelRule &&rule, std::span<const double> breaks, const AdaptiveOptions &opt) {
    struct Panel {
      double a, b;
      Vec<M> whole, left, right;
      double err;
    };
    std::vector<Panel> panels;
    AdaptiveResult<M> result;

    auto make = [&](double a, double b, const Vec<M> &whole) {
      const double m = 0.5 * (a + b);
      Panel p{a, b, whole, rule(a, m), rule(m, b), 0.0};
      result.evaluations += 2;
      Vec<M> diff = p.whole;
      for (std::size_t i = 0; i < M; ++i) diff[i] -= p.left[i] + p.right[i];
      p.err = norm1(diff);
      return p;
    };

    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (!(breaks[i + 1] > breaks[i])) continue;
      ++result.evaluations;
      panels.push_back(make(breaks[i], breaks[i + 1], rule(breaks[i], breaks[i + 1])));
    }

    auto cmp = [&](std::size_t x, std::size_t y) {
      if (panels[x].err != panels[y].err) return panels[x].err < panels[y].err;
      return panels[x].a > panels[y].a;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < panels.size(); ++i) heap.push(i);

    auto totals = [&](Vec<M> &value, double &err) {
      value = Vec<M>{};
      err = 0;
      for (const auto &p : panels) {
        value += p.left + p.right;
        err += p.err;
      }
    };

    Vec<M> value{};
    double err = 0;
    totals(value, err);
    while (!heap.empty()) {
      if (err <= std::max(opt.abs_tol, opt.rel_tol * norm1(value))) break;
      if (static_cast<int>(panels.size()) >= opt.max_panels) {
        result.converged = false;
        break;
      }
      const std::size_t worst = heap.top();
      heap.pop();
      const Panel p = panels[worst];
      const double m = 0.5 * (p.a + p.b);
      // Running totals are refreshed incrementally; a full resum happens at exit.
      for (std::size_t i = 0; i < M; ++i) value[i] -= p.left[i] + p.right[i];
      err -= p.err;
      panels[worst] = make(p.a, m, p.left);
      panels.push_back(make(m, p.b, p.right));
      for (std::size_t idx : {worst, panels.size() - 1}) {
        value += panels[idx].left + panels[idx].right;
        err += panels[idx].err;
        heap.push(idx);
      }
      err = std::max(err, 0.0);
    }

    std::sort(panels.begin(), panels.end(), [](const Panel &x, const Panel &y) { return x.a < y.a; });
    totals(result.value, result.error);
    result.panels = static_cast<int>(panels.size());
    return result;
  }

  /// Panel rule for a pointwise integrand `f(x) -> Vec<M>` using panel_rule().
  template <std::size_t M, class F> auto pointwise_rule(F &&f) {
    return [f = std::forward<F>(f)](double a, double b) {
      const auto &gl = panel_rule();
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      Vec<M> sum{};
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) sum += scaled(f(mid + half * gl.nodes[i]), gl.weights[i]);
      return scaled(sum, half);
    };
  }

  /// Sorted, de-duplicated breakpoints restricted to [lo, hi], with lo and hi included.
  std::vector<double> breakpoints(double lo, double hi, std::vector<double> interior);

  /// lo, lo*ratio, lo*ratio^2, ... strictly below hi.
  std::vector<double> geometric(double lo, double hi, double ratio);

} // namespace casimir::quad
