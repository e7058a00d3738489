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

// AVX2/FMA variants of the panel kernels. This translation unit is the only
// one compiled with -mavx2 -mfma; the dispatcher calls into it only after
// checking the CPU.

#include "casimir/kernels.hpp"

#include <immintrin.h>

namespace casimir::kernels::avx2 {

  namespace {

    // Cephes-style exp and log, four lanes at a time. Both stay within a few
    // ulp of libm over the ranges the kernels use: exp on [-745, 0], log on
    // positive normal numbers.

    inline __m256d to_double(__m256i small_int) {
      // Exact for |value| < 2^51.
      const __m256i magic_bits = _mm256_set1_epi64x(0x4338000000000000LL);
      const __m256d magic = _mm256_set1_pd(6755399441055744.0);
      return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(small_int, magic_bits)), magic);
    }

    inline __m256i to_int(__m256d integral) {
      const __m256d magic = _mm256_set1_pd(6755399441055744.0);
      const __m256i magic_bits = _mm256_set1_epi64x(0x4338000000000000LL);
      return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(integral, magic)), magic_bits);
    }

    inline __m256d exp_pd(__m256d x) {
      const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
      const __m256d c1 = _mm256_set1_pd(6.93145751953125E-1);
      const __m256d c2 = _mm256_set1_pd(1.42860682030941723212E-6);
      const __m256d lower = _mm256_set1_pd(-708.39641853226410622);
      const __m256d upper = _mm256_set1_pd(709.78271289338399678);

      const __m256d underflow = _mm256_cmp_pd(x, lower, _CMP_LT_OQ);
      x = _mm256_min_pd(_mm256_max_pd(x, lower), upper);

      const __m256d n = _mm256_floor_pd(_mm256_fmadd_pd(log2e, x, _mm256_set1_pd(0.5)));
      x = _mm256_fnmadd_pd(n, c1, x);
      x = _mm256_fnmadd_pd(n, c2, x);

      const __m256d xx = _mm256_mul_pd(x, x);
      __m256d p = _mm256_set1_pd(1.26177193074810590878E-4);
      p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(3.02994407707441961300E-2));
      p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910E-1));
      p = _mm256_mul_pd(p, x);
      __m256d q = _mm256_set1_pd(3.00198505138664455042E-6);
      q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.52448340349684104192E-3));
      q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766E-1));
      q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.00000000000000000009E0));

      __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
      e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

      const __m256i biased = _mm256_add_epi64(to_int(n), _mm256_set1_epi64x(1023));
      const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
      return _mm256_andnot_pd(underflow, _mm256_mul_pd(e, scale));
    }

    inline __m256d log_pd(__m256d x) {
      const __m256i bits = _mm256_castpd_si256(x);
      const __m256i exponent =
         _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(1022));
      const __m256i mantissa_bits = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                                                    _mm256_set1_epi64x(0x3FE0000000000000LL));
      const __m256d m = _mm256_castsi256_pd(mantissa_bits); // [0.5, 1)
      __m256d e = to_double(exponent);

      const __m256d half = _mm256_set1_pd(0.5);
      const __m256d small = _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
      e = _mm256_sub_pd(e, _mm256_and_pd(small, _mm256_set1_pd(1.0)));
      // small: z = m - 0.5, y = 0.5 m + 0.25;  else: z = m - 1, y = 0.5 m + 0.5
      const __m256d z = _mm256_sub_pd(_mm256_sub_pd(m, half), _mm256_andnot_pd(small, half));
      const __m256d y = _mm256_fmadd_pd(half, m, _mm256_blendv_pd(half, _mm256_set1_pd(0.25), small));
      const __m256d s = _mm256_div_pd(z, y);
      const __m256d ss = _mm256_mul_pd(s, s);

      __m256d r = _mm256_set1_pd(-7.89580278884799154124E-1);
      r = _mm256_fmadd_pd(r, ss, _mm256_set1_pd(1.63866645699558079767E1));
      r = _mm256_fmadd_pd(r, ss, _mm256_set1_pd(-6.41409952958715622951E1));
      __m256d q = _mm256_add_pd(ss, _mm256_set1_pd(-3.56722798256324312549E1));
      q = _mm256_fmadd_pd(q, ss, _mm256_set1_pd(3.12093766372244180303E2));
      q = _mm256_fmadd_pd(q, ss, _mm256_set1_pd(-7.69691943550460008604E2));

      __m256d w = _mm256_mul_pd(s, _mm256_div_pd(_mm256_mul_pd(ss, r), q));
      w = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), w);
      w = _mm256_add_pd(w, s);
      return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), w);
    }

    /// log(1 + y) via Kahan's correction: log(u) * y / (u - 1) with u = 1 + y,
    /// and y itself where u rounds to 1.
    inline __m256d log1p_pd(__m256d y) {
      const __m256d one = _mm256_set1_pd(1.0);
      const __m256d u = _mm256_add_pd(one, y);
      const __m256d um1 = _mm256_sub_pd(u, one);
      const __m256d exact = _mm256_cmp_pd(um1, _mm256_setzero_pd(), _CMP_EQ_OQ);
      const __m256d safe = _mm256_blendv_pd(um1, one, exact);
      const __m256d r = _mm256_div_pd(_mm256_mul_pd(log_pd(u), y), safe);
      return _mm256_blendv_pd(r, y, exact);
    }

    // Same operation order as the scalar variant, without FMA contraction.
    struct Channel {
      __m256d a, b, a2b2, b2dq;
      Channel(double a_, double b_, double dq)
         : a(_mm256_set1_pd(a_)), b(_mm256_set1_pd(b_)), a2b2(_mm256_set1_pd(a_ * a_ - b_ * b_)),
           b2dq(_mm256_set1_pd(b_ * b_ * dq)) {}
    };

    inline __m256d reflect(const Channel &c, __m256d g0, __m256d g0sq, __m256d gj) {
      const __m256d den = _mm256_add_pd(_mm256_mul_pd(c.a, g0), _mm256_mul_pd(c.b, gj));
      const __m256d num = _mm256_sub_pd(_mm256_mul_pd(c.a2b2, g0sq), c.b2dq);
      return _mm256_div_pd(num, _mm256_mul_pd(den, den));
    }

    struct SideRegs {
      Channel tm, te;
      __m256d dq;
      explicit SideRegs(const SideCoeffs &s)
         : tm(s.tm_a, s.tm_b, s.dq), te(s.te_a, s.te_b, s.dq), dq(_mm256_set1_pd(s.dq)) {}
    };

  } // namespace

  void exp_array(const double *x, double *y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, exp_pd(_mm256_loadu_pd(x + i)));
    if (i < n) {
      alignas(32) double in[4] = {0, 0, 0, 0}, out[4];
      for (std::size_t j = i; j < n; ++j) in[j - i] = x[j];
      _mm256_store_pd(out, exp_pd(_mm256_load_pd(in)));
      for (std::size_t j = i; j < n; ++j) y[j] = out[j - i];
    }
  }

  void log_array(const double *x, double *y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, log_pd(_mm256_loadu_pd(x + i)));
    if (i < n) {
      alignas(32) double in[4] = {1, 1, 1, 1}, out[4];
      for (std::size_t j = i; j < n; ++j) in[j - i] = x[j];
      _mm256_store_pd(out, log_pd(_mm256_load_pd(in)));
      for (std::size_t j = i; j < n; ++j) y[j] = out[j - i];
    }
  }

  void plate(const PlateParams &p, const double *u, std::size_t n, const PlateOut &out) {
    const SideRegs s1(p.side1), s2(p.side2);
    const __m256d inv_2d = _mm256_set1_pd(0.5 / p.gap);
    const __m256d inv_d = _mm256_set1_pd(1.0 / p.gap);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d sign = _mm256_set1_pd(-0.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256d uu = _mm256_loadu_pd(u + i);
      const __m256d g0 = _mm256_mul_pd(uu, inv_2d);
      const __m256d g0sq = _mm256_mul_pd(g0, g0);
      const __m256d g1 = _mm256_sqrt_pd(_mm256_add_pd(g0sq, s1.dq));
      const __m256d g2 = _mm256_sqrt_pd(_mm256_add_pd(g0sq, s2.dq));
      const __m256d decay = exp_pd(_mm256_xor_pd(uu, sign));
      const __m256d weight = _mm256_mul_pd(_mm256_mul_pd(uu, uu), inv_d);

      const __m256d x_tm = _mm256_mul_pd(
         decay, _mm256_mul_pd(reflect(s1.tm, g0, g0sq, g1), reflect(s2.tm, g0, g0sq, g2)));
      const __m256d x_te = _mm256_mul_pd(
         decay, _mm256_mul_pd(reflect(s1.te, g0, g0sq, g1), reflect(s2.te, g0, g0sq, g2)));
      const __m256d f_tm = _mm256_sub_pd(one, x_tm);
      const __m256d f_te = _mm256_sub_pd(one, x_te);

      _mm256_storeu_pd(out.energy_tm + i, _mm256_mul_pd(uu, log1p_pd(_mm256_xor_pd(x_tm, sign))));
      _mm256_storeu_pd(out.energy_te + i, _mm256_mul_pd(uu, log1p_pd(_mm256_xor_pd(x_te, sign))));
      _mm256_storeu_pd(out.pressure_tm + i,
                       _mm256_xor_pd(_mm256_div_pd(_mm256_mul_pd(weight, x_tm), f_tm), sign));
      _mm256_storeu_pd(out.pressure_te + i,
                       _mm256_xor_pd(_mm256_div_pd(_mm256_mul_pd(weight, x_te), f_te), sign));
    }
    if (i < n) {
      scalar::plate(p, u + i, n - i,
                    {out.energy_tm + i, out.energy_te + i, out.pressure_tm + i, out.pressure_te + i});
    }
  }

  void atom(const AtomParams &p, const double *u, std::size_t n, const AtomOut &out) {
    const SideRegs w(p.wall);
    const __m256d inv_2z = _mm256_set1_pd(0.5 / p.height);
    const __m256d s = _mm256_set1_pd(p.s);
    const __m256d two = _mm256_set1_pd(2.0), four = _mm256_set1_pd(4.0);
    const __m256d sign = _mm256_set1_pd(-0.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256d uu = _mm256_loadu_pd(u + i);
      const __m256d g0 = _mm256_mul_pd(uu, inv_2z);
      const __m256d g0sq = _mm256_mul_pd(g0, g0);
      const __m256d gw = _mm256_sqrt_pd(_mm256_add_pd(g0sq, w.dq));
      const __m256d decay = exp_pd(_mm256_xor_pd(uu, sign));
      const __m256d tm = _mm256_mul_pd(_mm256_mul_pd(decay, _mm256_sub_pd(_mm256_mul_pd(two, g0sq), s)),
                                       reflect(w.tm, g0, g0sq, gw));
      const __m256d te =
         _mm256_xor_pd(_mm256_mul_pd(_mm256_mul_pd(decay, s), reflect(w.te, g0, g0sq, gw)), sign);
      const __m256d curv = _mm256_mul_pd(four, g0sq);
      _mm256_storeu_pd(out.energy_tm + i, tm);
      _mm256_storeu_pd(out.energy_te + i, te);
      _mm256_storeu_pd(out.curvature_tm + i, _mm256_mul_pd(tm, curv));
      _mm256_storeu_pd(out.curvature_te + i, _mm256_mul_pd(te, curv));
    }
    if (i < n) {
      scalar::atom(p, u + i, n - i,
                   {out.energy_tm + i, out.energy_te + i, out.curvature_tm + i, out.curvature_te + i});
    }
  }

} // namespace casimir::kernels::avx2
