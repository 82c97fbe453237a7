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

#include "sbsim/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace sbsim {

std::vector<std::string> ModelParams::problems() const {
  std::vector<std::string> out;
  auto finite = [&out](double v, const char* name) {
    if (!std::isfinite(v)) out.push_back(std::string(name) + " must be finite");
  };
  finite(h, "h");
  finite(epsilon, "epsilon");
  finite(omega, "omega");
  finite(lambda, "lambda");
  finite(gamma, "gamma");
  if (gamma < 0) out.push_back("gamma must be >= 0");
  if (n_spins < 1) out.push_back("n_spins must be >= 1");
  if (levels < 2) out.push_back("levels (d_HO) must be >= 2");
  return out;
}

void ModelParams::validate() const {
  const auto p = problems();
  if (p.empty()) return;
  std::string msg = "invalid model parameters:";
  for (const auto& s : p) msg += " " + s + ";";
  throw std::invalid_argument(msg);
}

double effective_rate(double gamma, RateConvention c) {
  return c == RateConvention::Eq2Literal ? 2.0 * gamma : gamma;
}

std::string_view to_string(RateConvention c) {
  return c == RateConvention::Eq2Literal ? "eq2-literal" : "paper-collision";
}

std::optional<RateConvention> parse_rate_convention(std::string_view s) {
  if (s == "paper-collision") return RateConvention::PaperCollision;
  if (s == "eq2-literal") return RateConvention::Eq2Literal;
  return std::nullopt;
}

SystemLayout SystemLayout::make(unsigned n_spins, unsigned boson_qubits) {
  if (n_spins < 1) throw std::invalid_argument("SystemLayout: need at least one spin");
  SystemLayout l;
  l.width = n_spins + boson_qubits;
  unsigned next = 0;
  if (n_spins >= 2) l.spins.push_back(next++);
  for (unsigned b = 0; b < boson_qubits; ++b) l.boson.push_back(next++);
  while (l.spins.size() < n_spins) l.spins.push_back(next++);
  return l;
}

std::string_view to_string(CodeKind k) { return k == CodeKind::Gray ? "gray" : "binary"; }

std::optional<CodeKind> parse_code_kind(std::string_view s) {
  if (s == "gray" || s == "Gray") return CodeKind::Gray;
  if (s == "binary" || s == "standard-binary" || s == "StandardBinary") return CodeKind::StandardBinary;
  return std::nullopt;
}

unsigned TruncationSpec::qubits() const {
  if (levels < 2) throw std::invalid_argument("TruncationSpec: need at least 2 levels");
  unsigned q = 0;
  while ((1u << q) < levels) ++q;
  return q;
}

std::uint32_t code_word(unsigned i, const BitCode& code) {
  if (code.width >= 32 || i >= (1u << code.width)) throw std::out_of_range("code_word: level out of range");
  return code.kind == CodeKind::Gray ? (i ^ (i >> 1)) : i;
}

std::string code_bits(unsigned i, const BitCode& code) {
  const std::uint32_t w = code_word(i, code);
  std::string s(code.width, '0');
  for (unsigned m = 0; m < code.width; ++m)
    if (w & (1u << (code.width - 1 - m))) s[m] = '1';
  return s;
}

PauliSum encode_transition(unsigned l, unsigned lp, const BitCode& code) {
  const std::uint32_t out = code_word(l, code);
  const std::uint32_t in = code_word(lp, code);
  PauliSum acc(code.width);
  acc.add(PauliString(code.width, 1.0));
  for (unsigned m = 0; m < code.width; ++m) {
    const unsigned shift = code.width - 1 - m;
    const bool b = (out >> shift) & 1u;
    const bool bp = (in >> shift) & 1u;
    // |b><b'| on one qubit.
    PauliString first(code.width, 0.5);
    PauliString second(code.width, 0.5);
    if (b == bp) {
      second.set(m, Pauli::Z);
      if (b) second.set_coefficient(-0.5);
    } else {
      first.set(m, Pauli::X);
      second.set(m, Pauli::Y);
      second.set_coefficient(b ? -0.5 * kI : 0.5 * kI);
    }
    PauliSum factor(code.width);
    factor.add(first);
    factor.add(second);
    acc = acc * factor;
  }
  return canonicalize(acc);
}

PauliSum encode_boson_operator(BosonOp which, const TruncationSpec& spec, CodeKind kind) {
  const BitCode code = spec.code(kind);
  PauliSum acc(code.width);
  for (unsigned l = 0; l < spec.levels; ++l) {
    switch (which) {
      case BosonOp::Annihilate:
        if (l + 1 < spec.levels) acc.add(encode_transition(l, l + 1, code).scaled(std::sqrt(l + 1.0)));
        break;
      case BosonOp::Create:
        if (l + 1 < spec.levels) acc.add(encode_transition(l + 1, l, code).scaled(std::sqrt(l + 1.0)));
        break;
      case BosonOp::Number:
        if (l > 0) acc.add(encode_transition(l, l, code).scaled(static_cast<double>(l)));
        break;
    }
  }
  return canonicalize(acc);
}

PauliSum embed(const PauliSum& local, std::size_t width, std::span<const unsigned> targets) {
  if (targets.size() != local.width()) throw std::invalid_argument("embed: target count mismatch");
  PauliSum out(width);
  for (const auto& t : local.terms()) {
    PauliString wide(width, t.coefficient());
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (targets[j] >= width) throw std::out_of_range("embed: target out of range");
      wide.set(targets[j], t[j]);
    }
    out.add(std::move(wide));
  }
  return out;
}

PauliSum encode_hamiltonian(const ModelParams& params, CodeKind kind) {
  params.validate();
  const TruncationSpec spec{params.levels};
  const SystemLayout layout = SystemLayout::make(params.n_spins, spec.qubits());
  const std::size_t w = layout.width;

  const PauliSum number = embed(encode_boson_operator(BosonOp::Number, spec, kind), w, layout.boson);
  const PauliSum position =
      embed(encode_boson_operator(BosonOp::Annihilate, spec, kind) +
                encode_boson_operator(BosonOp::Create, spec, kind),
            w, layout.boson);

  PauliSum h = number.scaled(params.omega);
  for (unsigned s : layout.spins) {
    PauliString z(w, -0.5 * params.h);  // sigma_z = -Z with |up> = |1>
    z.set(s, Pauli::Z);
    PauliString x(w, 0.5 * params.epsilon);
    x.set(s, Pauli::X);
    h.add(z);
    h.add(x);
    PauliString xs(w, params.lambda);
    xs.set(s, Pauli::X);
    PauliSum coupling(w);
    coupling.add(xs);
    h.add(coupling * position);
  }
  return drop_identity(canonicalize(h));
}

}  // namespace sbsim
