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
#include "casimir/materials.hpp"
#include "casimir/modes.hpp"
#include "oracles/reference_values.hpp"

#include <doctest.h>

#include <cmath>

using namespace casimir;
using units::c;

namespace {
  const DielectricModel gold = default_materials().model("gold");
  const DielectricModel vac = DielectricModel::vacuum();
  const DielectricModel ideal = DielectricModel::ideal_metal();
} // namespace

TEST_SUITE("modes") {
  TEST_CASE("gamma") {
    const double w = 1e15;
    const auto g = gamma(vac, 2 * w / c, Frequency::real(w));
    CHECK(g.real() == doctest::Approx(std::sqrt(3.0) * w / c).epsilon(1e-15));
    CHECK(g.imag() == 0.0);
    CHECK(gamma(gold, 3e6, Frequency::imag(0.0)).real() == 3e6);
    CHECK(gamma(DielectricModel::lorentz(3.0, {}), 3e6, Frequency::imag(0.0)).real() == 3e6);
    CHECK(gamma_imag(gold, 1e7, 1e15) == doctest::Approx(ref::gold_gamma).epsilon(1e-14));
    CHECK(gamma(gold, 1e7, Frequency::imag(1e15)).real() == doctest::Approx(ref::gold_gamma).epsilon(1e-14));
  }

  TEST_CASE("gamma branch on the real axis") {
    // Propagating in vacuum: Re = 0, Im <= 0.
    const auto g = gamma(vac, 1e6, Frequency::real(1e15));
    CHECK(g.real() == 0.0);
    CHECK(g.imag() < 0.0);
    for (double w : {1e13, 1e14, 1e15, 1e16}) CHECK(gamma(gold, 1e6, Frequency::real(w)).real() >= 0.0);
  }

  TEST_CASE("fresnel amplitudes") {
    const auto f = Frequency::imag(5e14);
    CHECK(fresnel_tm(gold, gold, 3e6, f) == std::complex<double>(0.0));
    CHECK(fresnel_te(gold, gold, 3e6, f) == std::complex<double>(0.0));
    CHECK(fresnel_tm(vac, ideal, 3e6, f) == std::complex<double>(1.0));
    CHECK(fresnel_te(vac, ideal, 3e6, f) == std::complex<double>(-1.0));
    CHECK(fresnel_tm(vac, ideal, 3e6, Frequency::imag(0.0)) == std::complex<double>(1.0));
    CHECK(fresnel_tm(vac, gold, 3e6, f).real() == doctest::Approx(ref::gold_r_tm).epsilon(1e-13));
    CHECK(fresnel_te(vac, gold, 3e6, f).real() == doctest::Approx(ref::gold_r_te).epsilon(1e-13));
    CHECK(fresnel_tm(vac, gold, 3e6, f).imag() == 0.0);
  }

  TEST_CASE("zero-frequency TE limits are analytic") {
    CHECK(fresnel_te(vac, gold, 1e7, Frequency::imag(0.0)) == std::complex<double>(0.0));
    const auto plasma = DielectricModel::plasma(1e7 * c);
    const double expected = (1 - std::sqrt(2.0)) / (1 + std::sqrt(2.0));
    CHECK(fresnel_te(vac, plasma, 1e7, Frequency::imag(0.0)).real() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(fresnel_tm(vac, gold, 1e7, Frequency::imag(0.0)) == std::complex<double>(1.0));
    // Just above zero frequency the Drude TE amplitude is already small.
    CHECK(std::abs(fresnel_te(vac, gold, 1e7, Frequency::imag(1.0)).real()) < 1e-6);
  }

  TEST_CASE("passive imaginary-axis amplitudes lie in (-1, 1]") {
    for (const auto &name : default_materials().names()) {
      const auto m = default_materials().model(name);
      for (double xi : {0.0, 1e10, 1e13, 1e15, 1e17})
        for (double k : {1e3, 1e6, 1e8}) {
          for (auto pol : polarizations) {
            const double r = fresnel(pol, vac, m, k, Frequency::imag(xi)).real();
            CHECK(r > -1.0 - 1e-15);
            CHECK(r <= 1.0);
          }
        }
    }
  }

  TEST_CASE("mode condition") {
    const LayerStack stack{gold, vac, gold, 1e-6};
    const auto f = Frequency::imag(1e15);
    CHECK(mode_condition(stack, Polarization::tm, 5e6, f).real() == doctest::Approx(ref::gold_f_tm).epsilon(1e-14));
    CHECK(mode_condition(stack, Polarization::te, 5e6, f).real() == doctest::Approx(ref::gold_f_te).epsilon(1e-14));

    const LayerStack same{vac, vac, gold, 1e-6};
    CHECK(mode_condition(same, Polarization::tm, 5e6, f) == std::complex<double>(1.0));

    const LayerStack mirrors{ideal, vac, ideal, 1e-6};
    const double k = 2e6, xi = 1e14;
    const double g0 = std::sqrt(k * k + xi * xi / (c * c));
    CHECK(mode_condition(mirrors, Polarization::tm, k, Frequency::imag(xi)).real() ==
          doctest::Approx(1 - std::exp(-2 * g0 * 1e-6)).epsilon(1e-15));
  }

  TEST_CASE("mode condition invariants") {
    const auto lib = default_materials();
    const std::vector<std::pair<std::string, std::string>> pairs{
       {"gold", "gold"}, {"gold", "silicon_dark"}, {"silica", "gold"}, {"ideal", "silicon_irradiated"}};
    for (const auto &[a, b] : pairs) {
      const LayerStack s{lib.model(a), vac, lib.model(b), 0.7e-6};
      for (double xi : {1e11, 1e13, 1e15, 1e16})
        for (double k : {1e4, 1e6, 1e7}) {
          for (auto pol : polarizations) {
            const auto f = mode_condition(s, pol, k, Frequency::imag(xi));
            CHECK(f == mode_condition(s.swapped(), pol, k, Frequency::imag(xi)));
            const double rr = std::abs(fresnel(pol, vac, s.medium1, k, Frequency::imag(xi)) *
                                       fresnel(pol, vac, s.medium2, k, Frequency::imag(xi)));
            CHECK(f.real() > 0.0);
            CHECK(f.real() <= 1.0 + rr);
            // The general complex path agrees and is real on the axis.
            const auto g = mode_condition(s, pol, k, Frequency::complex({0.0, xi}));
            CHECK(std::abs(g.imag()) < 1e-12 * std::abs(g.real()));
            CHECK(g.real() == doctest::Approx(f.real()).epsilon(1e-12));
          }
        }
    }
  }

  TEST_CASE("large kd decouples the plates") {
    const LayerStack s{gold, vac, gold, 1e-6};
    for (auto pol : polarizations)
      CHECK(std::abs(mode_condition(s, pol, 50.0 / s.d, Frequency::imag(1e14)).real() - 1.0) < 1e-10);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS((LayerStack{gold, vac, gold, 0.0}).validate(), DomainError);
    CHECK_THROWS_AS((LayerStack{gold, vac, gold, -1.0}).validate(), DomainError);
    CHECK_THROWS_AS((LayerStack{gold, ideal, gold, 1e-6}).validate(), InvalidModelError);
    CHECK_THROWS_AS(fresnel_tm(gold, gold.with_conductivity(5.0), 1e6, Frequency::imag(0.0)), DomainError);
    // Surface-plasmon pole: eps = -2 at k = sqrt(2) w / c makes the TM denominator vanish.
    const double w = c;
    const auto neg = DielectricModel::plasma(std::sqrt(3.0) * w);
    CHECK_THROWS_AS(fresnel_tm(vac, neg, std::sqrt(2.0), Frequency::real(w)), SingularInterfaceError);
  }
}
