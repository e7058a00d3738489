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

#include "casimir/experiments.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace casimir {

  /// Writes `text` as "# "-prefixed lines.
  void write_fingerprint(std::ostream &out, std::string_view text);

  /// Fingerprint block, header row, one row per grid point (%.12g).
  void write_sweep_csv(std::ostream &out, const SweepResult &result, std::string_view fingerprint);

  /// The "# " lines at the top of a CSV, unprefixed.
  std::string fingerprint_from_csv(std::string_view csv);

} // namespace casimir
