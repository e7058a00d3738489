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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

// Batched evaluation of the imaginary-axis integrands over a panel of
// quadrature nodes. The node variable is u = 2 d gamma_0 (gamma_0 the gap
// decay constant); everything a node needs is carried in the params structs,
// so the kernels are plain arithmetic over arrays.
//
// Each reflecting side j is reduced to
//
//   r_TM = (tm_a g0 - tm_b gj) / (tm_a g0 + tm_b gj)
//   r_TE = (te_a g0 - te_b gj) / (te_a g0 + te_b gj),   gj = sqrt(g0^2 + dq)
//
// which covers ordinary media (tm_a = eps_j, tm_b = eps_0, te_a = te_b = 1),
// the ideal metal (r_TM = 1, r_TE = -1) and the xi = 0 limits.

namespace casimir::kernels {

  struct SideCoeffs {
    double tm_a = 1, tm_b = 1;
    double te_a = 1, te_b = 1;
    double dq = 0;
  };

  struct PlateParams {
    SideCoeffs side1, side2;
    double gap = 1; // d, metres
  };

  /// Per node, with g0 = u / (2d) and X = exp(-u) r1 r2:
  ///   energy_*   = u ln(1 - X)
  ///   pressure_* = -u (u / d) X / (1 - X)
  /// Multiplying by 1/(4 d^2) turns a u-quadrature of these into
  /// int k dk ln f and int k dk (-d ln f / dd).
  struct PlateOut {
    double *energy_tm, *energy_te, *pressure_tm, *pressure_te;
  };

  struct AtomParams {
    SideCoeffs wall;
    double s = 0;     // eps_0 xi^2 / c^2
    double height = 1; // z, metres
  };

  /// Per node, with g0 = u / (2z):
  ///   energy_tm   = exp(-u) (2 g0^2 - s) r_TM
  ///   energy_te   = -exp(-u) s r_TE
  ///   curvature_* = energy_* (2 g0)^2
  /// A u-quadrature times 1/(2z) gives int k dk e^{-2 g0 z} / g0 [...] and its
  /// second z-derivative.
  struct AtomOut {
    double *energy_tm, *energy_te, *curvature_tm, *curvature_te;
  };

  using PlateKernel = void (*)(const PlateParams &, const double *u, std::size_t n, const PlateOut &);
  using AtomKernel = void (*)(const AtomParams &, const double *u, std::size_t n, const AtomOut &);

  enum class Isa { scalar, avx2 };

  std::string to_string(Isa isa);

  struct KernelTable {
    Isa isa;
    PlateKernel plate;
    AtomKernel atom;
  };

  /// Variants compiled into this build that the running CPU supports.
  std::vector<Isa> available_isas();

  /// Table for a specific variant; throws if it is not available.
  const KernelTable &kernel_table(Isa isa);

  /// The variant used by the evaluators: the widest available one, unless the
  /// CASIMIR_KERNEL environment variable (scalar|avx2) says otherwise.
  /// Resolved once per process.
  const KernelTable &active_kernels();

  namespace scalar {
    void plate(const PlateParams &p, const double *u, std::size_t n, const PlateOut &out);
    void atom(const AtomParams &p, const double *u, std::size_t n, const AtomOut &out);
  } // namespace scalar

  namespace avx2 {
    void plate(const PlateParams &p, const double *u, std::size_t n, const PlateOut &out);
    void atom(const AtomParams &p, const double *u, std::size_t n, const AtomOut &out);
    /// Lane-wise exp and log used by the kernels; exposed for accuracy tests.
    void exp_array(const double *x, double *y, std::size_t n);
    void log_array(const double *x, double *y, std::size_t n);
  } // namespace avx2

} // namespace casimir::kernels
