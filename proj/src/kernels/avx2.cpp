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

#include <immintrin.h>

#include "local_index.hpp"
#include "sbsim/kernels.hpp"

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

namespace sbsim::kernels::avx2 {
namespace {

inline __m256d swap_re_im(__m256d x) { return _mm256_permute_pd(x, 0b0101); }

// x * (re + i im) for a broadcast complex scalar.
inline __m256d cmul_scalar(__m256d x, __m256d re, __m256d im) {
  return _mm256_fmaddsub_pd(x, re, _mm256_mul_pd(swap_re_im(x), im));
}

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d x) { _mm256_storeu_pd(reinterpret_cast<double*>(p), x); }

}  // namespace

void apply_local(cplx* v, unsigned n_bits, const LocalOp& op) {
  const detail::LocalIndex idx(n_bits, op);
  // Pairs of consecutive bases are only contiguous when bit 0 is untouched.
  if (idx.sorted_bits[0] == 0 || n_bits - idx.k < 1) {
    scalar::apply_local(v, n_bits, op);
    return;
  }
  const std::size_t dim = idx.dim;
  __m256d m_re[(1u << kMaxLocalBits) * (1u << kMaxLocalBits)];
  __m256d m_im[(1u << kMaxLocalBits) * (1u << kMaxLocalBits)];
  for (std::size_t e = 0; e < dim * dim; ++e) {
    m_re[e] = _mm256_set1_pd(op.matrix[e].real());
    m_im[e] = _mm256_set1_pd(op.matrix[e].imag());
  }
  const std::size_t n_bases = std::size_t{1} << (n_bits - idx.k);
  __m256d in[1u << kMaxLocalBits];
  for (std::size_t c = 0; c < n_bases; c += 2) {
    cplx* base = v + idx.base(c);
    for (std::size_t l = 0; l < dim; ++l) in[l] = load2(base + idx.offsets[l]);
    for (std::size_t r = 0; r < dim; ++r) {
      __m256d acc = _mm256_setzero_pd();
      const std::size_t row = r * dim;
      for (std::size_t l = 0; l < dim; ++l)
        acc = _mm256_add_pd(acc, cmul_scalar(in[l], m_re[row + l], m_im[row + l]));
      store2(base + idx.offsets[r], acc);
    }
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = a + i * n;
    __m256d rr = _mm256_setzero_pd();
    __m256d ri = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n2; j += 2) {
      const __m256d av = load2(row + j);
      const __m256d xv = load2(x + j);
      rr = _mm256_fmadd_pd(av, xv, rr);
      ri = _mm256_fmadd_pd(av, swap_re_im(xv), ri);
    }
    alignas(32) double s[4];
    alignas(32) double t[4];
    _mm256_store_pd(s, rr);
    _mm256_store_pd(t, ri);
    cplx acc(s[0] - s[1] + s[2] - s[3], t[0] + t[1] + t[2] + t[3]);
    for (std::size_t j = n2; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d re = _mm256_set1_pd(alpha.real());
  const __m256d im = _mm256_set1_pd(alpha.imag());
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n2; i += 2)
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_scalar(load2(x + i), re, im)));
  for (std::size_t i = n2; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace sbsim::kernels::avx2
