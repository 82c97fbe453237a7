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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sbsim/params.hpp"
#include "sbsim/pauli.hpp"

namespace sbsim {

enum class CodeKind { Gray, StandardBinary };

std::string_view to_string(CodeKind k);
std::optional<CodeKind> parse_code_kind(std::string_view s);

/// Integer-to-bit code on `width` qubits.
struct BitCode {
  CodeKind kind = CodeKind::Gray;
  unsigned width = 2;
};

/// Oscillator truncated to `levels` states, stored on ceil(log2(levels)) qubits.
struct TruncationSpec {
  unsigned levels = 4;

  unsigned qubits() const;
  BitCode code(CodeKind kind) const { return {kind, qubits()}; }
};

/// Code word of level i as an integer; bit (width-1) is the leftmost qubit.
std::uint32_t code_word(unsigned i, const BitCode& code);

/// Code word as a '0'/'1' string, leftmost qubit first.
std::string code_bits(unsigned i, const BitCode& code);

/// Pauli form of |code(l)><code(lp)| on the code's qubits.
PauliSum encode_transition(unsigned l, unsigned lp, const BitCode& code);

enum class BosonOp { Annihilate, Create, Number };

/// Canonical Pauli form of a truncated ladder/number operator.
PauliSum encode_boson_operator(BosonOp which, const TruncationSpec& spec, CodeKind kind);

/// Embeds a sum on a sub-register into a wider one: local qubit j lands on
/// `targets[j]`.
PauliSum embed(const PauliSum& local, std::size_t width, std::span<const unsigned> targets);

/// Canonical Pauli form of the spin-boson Hamiltonian on the system register
/// (see SystemLayout), identity term dropped.
///
/// Spin states map to qubits as |down> = |0>, |up> = |1>, so the physical
/// sigma_z of a spin is -Z on its qubit.
PauliSum encode_hamiltonian(const ModelParams& params, CodeKind kind);

}  // namespace sbsim
