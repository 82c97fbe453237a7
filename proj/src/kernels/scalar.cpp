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

#include "local_index.hpp"
#include "sbsim/kernels.hpp"

namespace sbsim::kernels::scalar {

void apply_local(cplx* v, unsigned n_bits, const LocalOp& op) {
  const detail::LocalIndex idx(n_bits, op);
  const std::size_t n_bases = std::size_t{1} << (n_bits - idx.k);
  const cplx* m = op.matrix.data();
  std::array<cplx, 1u << kMaxLocalBits> in{};
  for (std::size_t c = 0; c < n_bases; ++c) {
    cplx* base = v + idx.base(c);
    for (std::size_t l = 0; l < idx.dim; ++l) in[l] = base[idx.offsets[l]];
    for (std::size_t r = 0; r < idx.dim; ++r) {
      cplx acc = 0.0;
      const cplx* row = m + r * idx.dim;
      for (std::size_t l = 0; l < idx.dim; ++l) acc += row[l] * in[l];
      base[idx.offsets[r]] = acc;
    }
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    const cplx* row = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace sbsim::kernels::scalar
