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

#include "casimir/errors.hpp"
#include "casimir/kernels.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/spectrum.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace casimir;
namespace kn = casimir::kernels;

namespace {
  bool have_avx2() {
    const auto isas = kn::available_isas();
    return std::find(isas.begin(), isas.end(), kn::Isa::avx2) != isas.end();
  }

  double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0 ? 0.0 : std::abs(a - b) / s;
  }

  std::vector<kn::SideCoeffs> sides() {
    return {{1, 1, 1, 1, 0},             // transparent
            {1, 0, 0, 1, 0},             // ideal metal
            {1e6, 1, 1, 1, 3e14},        // metal
            {11.7, 1, 1, 1, 2e13},       // dielectric
            {1, 0, 1, 1, 0},             // eps = inf at xi = 0, Drude TE
            {3.8, 1.0, 1, 1, 1e-3}};     // weakly reflecting
  }

  std::vector<double> nodes(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(-9, std::log(80.0));
    std::vector<double> u(n);
    for (auto &x : u) x = std::exp(U(rng));
    u[0] = 1e-12;
    u[n - 1] = 80;
    return u;
  }
} // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar variant is always available") {
    CHECK(kn::kernel_table(kn::Isa::scalar).isa == kn::Isa::scalar);
    CHECK(kn::to_string(kn::Isa::scalar) == "scalar");
  }

  TEST_CASE("avx2 plate kernel matches scalar") {
    if (!have_avx2()) return;
    const std::size_t n = 1027; // exercises the scalar tail
    const auto u = nodes(n);
    for (const auto &s1 : sides())
      for (const auto &s2 : sides())
        for (double d : {1e-8, 1e-6, 1e-5}) {
          const kn::PlateParams p{s1, s2, d};
          std::vector<double> a(4 * n), b(4 * n);
          kn::scalar::plate(p, u.data(), n, {&a[0], &a[n], &a[2 * n], &a[3 * n]});
          kn::avx2::plate(p, u.data(), n, {&b[0], &b[n], &b[2 * n], &b[3 * n]});
          double worst = 0;
          for (std::size_t i = 0; i < 4 * n; ++i) worst = std::max(worst, rel(a[i], b[i]));
          // The pressure slots divide by 1 - X, which loses log10(1/u) digits
          // for two good reflectors at small u; one ulp of exp(-u) shows there.
          CHECK(worst < 2e-12);
        }
  }

  TEST_CASE("avx2 atom kernel matches scalar") {
    if (!have_avx2()) return;
    const std::size_t n = 515;
    const auto u = nodes(n);
    for (const auto &w : sides())
      for (double s : {0.0, 1e10, 1e14}) {
        const kn::AtomParams p{w, s, 2e-6};
        std::vector<double> a(4 * n), b(4 * n);
        kn::scalar::atom(p, u.data(), n, {&a[0], &a[n], &a[2 * n], &a[3 * n]});
        kn::avx2::atom(p, u.data(), n, {&b[0], &b[n], &b[2 * n], &b[3 * n]});
        double worst = 0;
        for (std::size_t i = 0; i < 4 * n; ++i) worst = std::max(worst, rel(a[i], b[i]));
        CHECK(worst < 1e-13);
      }
  }

  TEST_CASE("vector exp and log accuracy") {
    if (!have_avx2()) return;
    std::vector<double> x, y(4001), z(4001);
    for (int i = 0; i <= 4000; ++i) x.push_back(-700.0 + 0.35 * i);
    kn::avx2::exp_array(x.data(), y.data(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(rel(y[i], std::exp(x[i])) < 4e-16);
    std::vector<double> p;
    for (int i = 0; i <= 4000; ++i) p.push_back(std::exp(-700.0 + 0.35 * i));
    kn::avx2::log_array(p.data(), z.data(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(z[i] - std::log(p[i])) <= 4e-16 * std::max(1.0, std::abs(std::log(p[i]))));
    const double under = -800.0;
    double out = 1;
    kn::avx2::exp_array(&under, &out, 1);
    CHECK(out == 0.0);
  }

  TEST_CASE("spectra agree between variants") {
    if (!have_avx2()) return;
    const auto gold = default_materials().model("gold");
    const LayerStack s{gold, DielectricModel::vacuum(), gold, 0.5e-6};
    spectral::Stats st1, st2;
    const spectral::PlateSpectrum a(s, {1e-10, 4000}, st1, kn::kernel_table(kn::Isa::scalar));
    const spectral::PlateSpectrum b(s, {1e-10, 4000}, st2, kn::kernel_table(kn::Isa::avx2));
    for (double xi : {0.0, 1e12, 1e14, 1e15, 1e16}) {
      const auto va = a(xi), vb = b(xi);
      for (int j = 0; j < 4; ++j) CHECK(rel(va[j], vb[j]) < 1e-12);
    }
  }
}
