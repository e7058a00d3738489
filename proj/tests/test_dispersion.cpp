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
#include "dispersion_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

using namespace casimir;

namespace {
  const double wp = units::from_ev(9.0);
  const DielectricModel plasma = DielectricModel::plasma(wp);
  const DielectricModel vac = DielectricModel::vacuum();

  std::vector<double> kd_grid(double d, double lo, double hi, int n) {
    std::vector<double> k(n);
    for (int i = 0; i < n; ++i) k[i] = (lo + (hi - lo) * i / (n - 1)) * units::pi / d;
    return k;
  }

  std::vector<double> roots_at(const DispersionResult &r, double k, ModeClass cls) {
    std::vector<double> out;
    for (const auto &p : r.points)
      if (p.k == k && p.cls == cls) out.push_back(p.omega);
    return out;
  }
} // namespace

TEST_SUITE("dispersion") {
  TEST_CASE("no TE evanescent modes") {
    const LayerStack s{plasma, vac, plasma, 0.5e-6};
    const auto r = dispersion_solve(s, Polarization::te, kd_grid(s.d, 0.02, 5.0, 64));
    for (const auto &p : r.points) CHECK(p.cls == ModeClass::propagating);
    CHECK(!r.points.empty());
  }

  TEST_CASE("coupled surface plasmons approach w_p / sqrt(2)") {
    const LayerStack s{plasma, vac, plasma, 10e-9};
    const double ws = surface_plasmon_frequency(plasma);
    CHECK(ws == doctest::Approx(wp / std::sqrt(2.0)).epsilon(1e-15));
    std::vector<double> k;
    for (double kd : {10.0, 12.0, 15.0, 20.0}) k.push_back(kd / s.d);
    const auto r = dispersion_solve(s, Polarization::tm, k);
    for (double kk : k) {
      const auto ev = roots_at(r, kk, ModeClass::evanescent);
      REQUIRE(ev.size() == 2);
      for (double w : ev) CHECK(std::abs(w / ws - 1.0) < 1e-3);
    }
  }

  TEST_CASE("propagating roots match the phase oracle") {
    for (auto pol : polarizations) {
      for (double d : {0.5e-6, 10e-9}) {
        const LayerStack s{plasma, vac, plasma, d};
        const oracle::Cavity cav{{1.0, wp}, {1.0, wp}, d, pol == Polarization::tm};
        const auto k = kd_grid(d, 0.02, 5.0, 24);
        const auto r = dispersion_solve(s, pol, k);
        for (double kk : k) {
          auto mine = roots_at(r, kk, ModeClass::propagating);
          auto ref = oracle::guided_modes(cav, kk);
          std::sort(mine.begin(), mine.end());
          INFO("d = " << d << ", kd = " << kk * d << ", pol = " << to_string(pol));
          REQUIRE(mine.size() == ref.size());
          for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i] == doctest::Approx(ref[i]).epsilon(1e-6));
        }
      }
    }
  }

  TEST_CASE("branches are continuous in k") {
    const LayerStack s{plasma, vac, plasma, 0.5e-6};
    const auto r = dispersion_solve(s, Polarization::tm, kd_grid(s.d, 0.02, 5.0, 256));
    std::map<int, std::pair<double, double>> last; // branch -> (k, omega)
    for (const auto &p : r.points) {
      if (auto it = last.find(p.branch); it != last.end()) CHECK(std::abs(p.omega / it->second.second - 1) < 0.25);
      last[p.branch] = {p.k, p.omega};
    }
  }

  TEST_CASE("asymmetric stacks and bulk edge") {
    const auto other = DielectricModel::plasma(0.8 * wp);
    const LayerStack s{plasma, vac, other, 0.3e-6};
    const double k = 2e6;
    CHECK(bulk_boundary(s, k) == doctest::Approx(std::sqrt(0.64 * wp * wp + units::c * units::c * k * k)));
    const oracle::Cavity cav{{1.0, wp}, {1.0, 0.8 * wp}, s.d, true};
    const auto r = dispersion_solve(s, Polarization::tm, {k});
    auto mine = roots_at(r, k, ModeClass::propagating);
    const auto ref = oracle::guided_modes(cav, k);
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i] == doctest::Approx(ref[i]).epsilon(1e-6));
  }

  TEST_CASE("csv layout") {
    const LayerStack s{plasma, vac, plasma, 0.5e-6};
    const auto r = dispersion_solve(s, Polarization::te, kd_grid(s.d, 0.5, 1.0, 2));
    std::ostringstream out;
    write_dispersion_csv(out, r, s.d, surface_plasmon_frequency(plasma));
    const auto text = out.str();
    CHECK(text.rfind("kd_over_pi,omega_over_omega_s,channel,class,branch\n", 0) == 0);
    CHECK(text.find(",TE,propagating,") != std::string::npos);
  }

  TEST_CASE("preconditions") {
    const auto gold = default_materials().model("gold");
    CHECK_THROWS_AS(dispersion_solve({gold, vac, gold, 1e-6}, Polarization::tm, {1e6}), DomainError);
    CHECK_THROWS_AS(dispersion_solve({plasma, vac, plasma, 1e-6}, Polarization::tm, {2e6, 1e6}), DomainError);
    CHECK_THROWS_AS(dispersion_solve({DielectricModel::ideal_metal(), vac, plasma, 1e-6}, Polarization::tm, {1e6}),
                    DomainError);
  }
}
