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

#include <doctest.h>

using namespace casimir;

TEST_SUITE("materials") {
  TEST_CASE("shipped defaults") {
    const auto lib = default_materials();
    for (const char *name : {"vacuum", "ideal", "gold", "gold_plasma", "silicon_dark", "silicon_irradiated", "silica"})
      CHECK(lib.contains(name));
    const auto gold = lib.model("gold");
    CHECK(gold.kind() == MaterialKind::drude);
    CHECK(gold.carriers().at(0).plasma == doctest::Approx(9.0 * units::ev_to_rad_per_s));
    CHECK(gold.carriers().at(0).relaxation == doctest::Approx(0.035 * units::ev_to_rad_per_s));
    CHECK(lib.model("silicon_dark").eval_imag(1e17) > 1.0);
    // Static permittivities of the insulating backgrounds.
    CHECK(lib.model("silicon_dark").without_carriers().eval_imag(1.0) == doctest::Approx(11.66).epsilon(1e-6));
    CHECK(lib.model("silica").with_conductivity(0).eval_imag(1.0) == doctest::Approx(3.8).epsilon(1e-6));
  }

  TEST_CASE("to_config round-trips exactly") {
    const auto lib = default_materials();
    for (const auto &name : lib.names()) {
      MaterialLibrary again;
      again.merge_config(lib.spec(name).to_config());
      CHECK(again.spec(name) == lib.spec(name));
      CHECK(again.model(name) == lib.model(name));
    }
  }

  TEST_CASE("format_exact is shortest round-trip") {
    CHECK(format_exact(0.1) == "0.1");
    CHECK(format_exact(1e-10) == "1e-10");
    const double x = 0.1 + 0.2;
    CHECK(std::stod(format_exact(x)) == x);
  }

  TEST_CASE("later definitions replace earlier ones") {
    MaterialLibrary lib = default_materials();
    lib.merge_config("[material gold]\nkind = drude\nomega_p_ev = 8.5\nnu_ev = 0.03\n");
    CHECK(lib.model("gold").carriers().at(0).plasma == doctest::Approx(8.5 * units::ev_to_rad_per_s));
  }

  TEST_CASE("config errors name the key") {
    MaterialLibrary lib;
    CHECK_THROWS_WITH_AS(lib.merge_config("[material x]\nkind = drude\nomega_p_ev = abc\n"),
                         doctest::Contains("omega_p_ev"), ConfigError);
    CHECK_THROWS_AS(lib.merge_config("[material x]\nkind = unobtainium\n"), ConfigError);
    CHECK_THROWS_AS(lib.merge_config("[material x\nkind = vacuum\n"), ConfigError);
    CHECK_THROWS_AS(lib.spec("nope"), ConfigError);
  }
}
