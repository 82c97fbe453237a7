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

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>

#include "sbsim/kernels.hpp"

namespace sbsim::kernels::detail {

// Shared index bookkeeping for apply_local: offsets of the 2^k local
// amplitudes relative to a base index, and the sorted bit list used to
// spread a compact counter into a base index with all target bits zero.
struct LocalIndex {
  unsigned k = 0;
  std::size_t dim = 1;
  std::array<std::size_t, 1u << kMaxLocalBits> offsets{};
  std::array<unsigned, kMaxLocalBits> sorted_bits{};

  LocalIndex(unsigned n_bits, const LocalOp& op) : k(static_cast<unsigned>(op.bits.size())) {
    if (k == 0 || k > kMaxLocalBits) throw std::invalid_argument("apply_local: bad bit count");
    dim = std::size_t{1} << k;
    if (op.matrix.size() != dim * dim) throw std::invalid_argument("apply_local: matrix size mismatch");
    for (unsigned j = 0; j < k; ++j) {
      if (op.bits[j] >= n_bits) throw std::invalid_argument("apply_local: bit out of range");
      sorted_bits[j] = op.bits[j];
    }
    std::sort(sorted_bits.begin(), sorted_bits.begin() + k);
    for (unsigned j = 1; j < k; ++j)
      if (sorted_bits[j] == sorted_bits[j - 1]) throw std::invalid_argument("apply_local: repeated bit");
    for (std::size_t l = 0; l < dim; ++l) {
      std::size_t off = 0;
      for (unsigned j = 0; j < k; ++j)
        if (l & (std::size_t{1} << (k - 1 - j))) off |= std::size_t{1} << op.bits[j];
      offsets[l] = off;
    }
  }

  std::size_t base(std::size_t counter) const {
    for (unsigned j = 0; j < k; ++j) {
      const std::size_t b = sorted_bits[j];
      const std::size_t low = counter & ((std::size_t{1} << b) - 1);
      counter = ((counter >> b) << (b + 1)) | low;
    }
    return counter;
  }
};

}  // namespace sbsim::kernels::detail
