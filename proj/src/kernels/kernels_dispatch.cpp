// rmt - random matrix spectra of signal-capture data
// Copyright (C) 2026 The rmt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdlib>
#include <string_view>

#include "rmt/kernels.hpp"

namespace rmt::kernels {

#if defined(RMT_HAVE_AVX2_TU)
namespace detail {
const KernelTable& avx2_table() noexcept;
}
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(RMT_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("RMT_SIMD"); env != nullptr && std::string_view(env) == "scalar")
    return scalar_table();
  if (const KernelTable* t = table_for(Isa::Avx2)) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_table();
    case Isa::Avx2:
#if defined(RMT_HAVE_AVX2_TU)
      if (cpu_has_avx2()) return &detail::avx2_table();
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (table_for(Isa::Avx2) != nullptr) out.push_back(Isa::Avx2);
  return out;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace rmt::kernels
