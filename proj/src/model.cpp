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

#include "sbsim/model.hpp"

#include <stdexcept>

namespace sbsim {

SpinBosonModel::SpinBosonModel(const ModelParams& params, CodeKind code)
    : params_(params), code_(code), truncation_{params.levels} {
  params_.validate();
  layout_ = SystemLayout::make(params_.n_spins, truncation_.qubits());
  hamiltonian_ = encode_hamiltonian(params_, code_);
  fingerprint_ = hamiltonian_.fingerprint();
  number_ = embed(encode_boson_operator(BosonOp::Number, truncation_, code_), layout_.width, layout_.boson);
}

Matrix SpinBosonModel::dense_hamiltonian() const {
  if (layout_.width > kMaxDenseWidth) throw std::length_error("dense_hamiltonian: register too wide");
  return to_dense(hamiltonian_);
}

std::vector<JumpOperator> SpinBosonModel::lindblad_operators(RateConvention convention) const {
  const double rate = effective_rate(params_.gamma, convention);
  std::vector<JumpOperator> out;
  for (unsigned s : layout_.spins) {
    // |down><up| = |0><1| = (X + iY) / 2
    PauliSum lower(layout_.width);
    PauliString x(layout_.width, 0.5);
    x.set(s, Pauli::X);
    PauliString y(layout_.width, 0.5 * kI);
    y.set(s, Pauli::Y);
    lower.add(x);
    lower.add(y);
    out.push_back({to_dense(lower), rate});
  }
  return out;
}

std::vector<int> SpinBosonModel::initial_bits(const InitialStateSpec& spec) const {
  if (spec.spins.size() != params_.n_spins)
    throw std::invalid_argument("initial state: expected " + std::to_string(params_.n_spins) + " spin states");
  if (spec.boson_level >= params_.levels) throw std::out_of_range("initial state: boson level out of range");
  std::vector<int> bits(layout_.width, 0);
  for (std::size_t k = 0; k < spec.spins.size(); ++k)
    bits[layout_.spins[k]] = spec.spins[k] == SpinState::Up ? 1 : 0;
  const std::string word = code_bits(spec.boson_level, truncation_.code(code_));
  for (std::size_t j = 0; j < word.size(); ++j) bits[layout_.boson[j]] = word[j] == '1';
  return bits;
}

DensityMatrix SpinBosonModel::initial_state(const InitialStateSpec& spec) const {
  const auto bits = initial_bits(spec);
  return DensityMatrix::basis(bits);
}

InitialStateSpec default_initial_state(unsigned n_spins) {
  InitialStateSpec s;
  s.spins.assign(n_spins, SpinState::Down);
  s.spins.front() = SpinState::Up;
  return s;
}

}  // namespace sbsim
