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

#include <cstdlib>
#include <string_view>

namespace casimir::kernels {

  namespace {

    bool cpu_has_avx2() {
#if defined(CASIMIR_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    }

    const KernelTable scalar_table{Isa::scalar, &scalar::plate, &scalar::atom};
#if defined(CASIMIR_HAVE_AVX2_KERNELS)
    const KernelTable avx2_table{Isa::avx2, &avx2::plate, &avx2::atom};
#endif

    const KernelTable &resolve() {
      const auto isas = available_isas();
      const char *env = std::getenv("CASIMIR_KERNEL");
      if (env && *env) {
        const std::string_view want(env);
        if (want == "scalar") return kernel_table(Isa::scalar);
        if (want == "avx2") return kernel_table(Isa::avx2);
        throw ConfigError("CASIMIR_KERNEL must be 'scalar' or 'avx2', got '" + std::string(want) + "'");
      }
      return kernel_table(isas.back());
    }

  } // namespace

  std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

  std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::scalar};
    if (cpu_has_avx2()) out.push_back(Isa::avx2);
    return out;
  }

  const KernelTable &kernel_table(Isa isa) {
    if (isa == Isa::scalar) return scalar_table;
#if defined(CASIMIR_HAVE_AVX2_KERNELS)
    if (cpu_has_avx2()) return avx2_table;
#endif
    throw ConfigError("kernel variant '" + to_string(isa) + "' is not available on this build or CPU");
  }

  const KernelTable &active_kernels() {
    static const KernelTable &table = resolve();
    return table;
  }

} // namespace casimir::kernels
