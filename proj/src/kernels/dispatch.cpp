// Copyright 2026 The sbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "sbsim/kernels.hpp"

namespace sbsim::kernels {
namespace {

constexpr KernelTable kScalarTable{&scalar::apply_local, &scalar::matvec, &scalar::axpy, "scalar"};

#if defined(SBSIM_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::apply_local, &avx2::matvec, &avx2::axpy, "avx2"};
#endif

bool force_scalar() {
  const char* env = std::getenv("SBSIM_FORCE_SCALAR");
  return env != nullptr && std::string_view(env) != "" && std::string_view(env) != "0";
}

Isa detect() {
  if (force_scalar()) return Isa::Scalar;
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

bool avx2_available() {
#if defined(SBSIM_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

const KernelTable& table_for(Isa isa) {
#if defined(SBSIM_HAVE_AVX2)
  if (isa == Isa::Avx2 && avx2_available()) return kAvx2Table;
#endif
  (void)isa;
  return kScalarTable;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const KernelTable& active() {
  static const KernelTable& t = table_for(active_isa());
  return t;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace sbsim::kernels
