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

#include "casimir/sweep_csv.hpp"

#include <cstdio>

namespace casimir {

  void write_fingerprint(std::ostream &out, std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      const auto line = text.substr(pos, eol - pos);
      out << (line.empty() ? "#" : "# ") << line << '\n';
      pos = eol + 1;
    }
  }

  void write_sweep_csv(std::ostream &out, const SweepResult &result, std::string_view fingerprint) {
    write_fingerprint(out, fingerprint);
    out << result.x_label;
    for (const auto &c : result.columns) out << ',' << c;
    out << '\n';
    char buf[32];
    for (std::size_t i = 0; i < result.x.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", result.x[i]);
      out << buf;
      for (double v : result.rows[i]) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out << ',' << buf;
      }
      out << '\n';
    }
  }

  std::string fingerprint_from_csv(std::string_view csv) {
    std::string text;
    std::size_t pos = 0;
    while (pos < csv.size() && csv[pos] == '#') {
      auto eol = csv.find('\n', pos);
      if (eol == std::string_view::npos) eol = csv.size();
      auto line = csv.substr(pos + 1, eol - pos - 1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      text.append(line).push_back('\n');
      pos = eol + 1;
    }
    return text;
  }

} // namespace casimir
