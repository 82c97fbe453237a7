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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

/// Inner-loop arithmetic on complex vectors.
///
/// Every kernel has a portable scalar reference implementation and, where the
/// build supports it, an AVX2+FMA variant. The variant is picked once at
/// startup from the CPU feature bits; `SBSIM_FORCE_SCALAR=1` in the
/// environment pins the scalar path. Tests compare both paths directly via the
/// `scalar::` and `avx2::` entry points.
namespace sbsim::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

/// Matrix acting on `k` index bits of a vector of length 2^n_bits.
///
/// `bits[0]` is the most significant bit of the local (2^k) index; the matrix is
/// 2^k x 2^k, row-major. k is limited to 4 (16x16 matrices), which covers
/// two-qubit superoperators.
struct LocalOp {
  std::span<const unsigned> bits;
  std::span<const cplx> matrix;
};

constexpr std::size_t kMaxLocalBits = 4;

struct KernelTable {
  /// v <- M v on the bits described by `op`.
  void (*apply_local)(cplx* v, unsigned n_bits, const LocalOp& op);
  /// y <- A x, A row-major n x n.
  void (*matvec)(const cplx* a, const cplx* x, cplx* y, std::size_t n);
  /// y <- y + alpha x
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  const char* name;
};

namespace scalar {
void apply_local(cplx* v, unsigned n_bits, const LocalOp& op);
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void apply_local(cplx* v, unsigned n_bits, const LocalOp& op);
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace avx2
#endif

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();

const KernelTable& table_for(Isa isa);

/// The dispatch table in use for this process.
const KernelTable& active();

Isa active_isa();

std::string_view isa_name(Isa isa);

}  // namespace sbsim::kernels
