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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbsim/linalg.hpp"
#include "sbsim/model.hpp"
#include "sbsim/params.hpp"
#include "sbsim/pauli.hpp"

namespace sbsim {

enum class GateKind { I, X, SX, RZ, RY, CX, CRY, Reset, Measure, Barrier };

std::string_view to_string(GateKind k);
std::optional<GateKind> parse_gate_kind(std::string_view s);

/// Operand count; Barrier spans the whole register and has none.
unsigned arity(GateKind k);
bool is_unitary(GateKind k);
/// Member of the device gate set {CX, ID, RZ, SX, X}.
bool is_native(GateKind k);

/// One operation. For two-qubit gates q[0] is the control.
struct Gate {
  GateKind kind = GateKind::I;
  std::array<unsigned, 2> q{};
  double angle = 0.0;  // RZ, RY, CRY
  unsigned clbit = 0;  // Measure

  std::span<const unsigned> qubits() const { return {q.data(), arity(kind)}; }
  bool acts_on(unsigned qubit) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Dense unitary of a unitary gate on its own operands (q[0] most significant).
Matrix gate_unitary(const Gate& g);

enum class QubitRole { Spin, Boson, Aux, Unused };

std::string_view to_string(QubitRole r);
std::optional<QubitRole> parse_qubit_role(std::string_view s);

class Circuit {
 public:
  Circuit() = default;
  /// Fragments may leave `roles` empty.
  explicit Circuit(unsigned width, std::vector<QubitRole> roles = {});

  unsigned width() const { return width_; }
  const std::vector<QubitRole>& roles() const { return roles_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Throws std::invalid_argument on bad operands or non-finite angles.
  void add(const Gate& g);
  void x(unsigned q) { add({GateKind::X, {q, 0}}); }
  void sx(unsigned q) { add({GateKind::SX, {q, 0}}); }
  void rz(unsigned q, double a) { add({GateKind::RZ, {q, 0}, a}); }
  void ry(unsigned q, double a) { add({GateKind::RY, {q, 0}, a}); }
  void cx(unsigned c, unsigned t) { add({GateKind::CX, {c, t}}); }
  void cry(unsigned c, unsigned t, double a) { add({GateKind::CRY, {c, t}, a}); }
  void reset(unsigned q) { add({GateKind::Reset, {q, 0}}); }
  void measure(unsigned q, unsigned clbit) { add({GateKind::Measure, {q, 0}, 0.0, clbit}); }
  void barrier() { add({GateKind::Barrier, {0, 0}}); }

  /// Appends `fragment`, sending its qubit j to `qubit_map[j]` (identity if
  /// the map is empty).
  void append(const Circuit& fragment, std::span<const unsigned> qubit_map = {});

  std::size_t barrier_count() const;
  unsigned clbit_count() const;

  /// Structural problems of an evolution circuit: measurements before the
  /// last barrier, resets on non-aux qubits.
  std::vector<std::string> problems() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned width_ = 0;
  std::vector<QubitRole> roles_;
  std::vector<Gate> gates_;
};

/// Circuit for exp(-i angle c P) where P c is `term` (real coefficient c).
Circuit pauli_exponential(const PauliString& term, double angle);

/// One Trotter step exp(-i H dt) of order 1 or 2, terms in the sum's order.
Circuit trotter_step(const PauliSum& h, double dt, int order);

/// theta = arcsin(sqrt(1 - exp(-gamma_eff dt))).
double collision_angle(double gamma, double dt, RateConvention convention);

/// CRY(2 theta) spin->aux, CX aux->spin, reset aux.
void append_collision(Circuit& c, double theta, unsigned spin, unsigned aux);

/// Two-qubit fragment: qubit 0 is the spin, qubit 1 the aux.
Circuit collision_block(double gamma, double dt, RateConvention convention);

/// Register of an assembled evolution circuit.
///
/// One spin: [boson..., spin, aux]. Two or more spins:
/// [aux 1, spin 1, boson..., spin 2, aux 2, spin 3, aux 3, ...].
struct EvolutionLayout {
  unsigned width = 0;
  std::vector<QubitRole> roles;
  std::vector<unsigned> system;  // circuit qubit of each system-register qubit
  std::vector<unsigned> spins;
  std::vector<unsigned> boson;
  std::vector<unsigned> aux;  // aux[k] pairs with spins[k]

  static EvolutionLayout make(unsigned n_spins, unsigned boson_qubits);
};

struct EvolutionSpec {
  unsigned n_steps = 0;
  double dt = 0.1;
  int order = 2;
  RateConvention convention = RateConvention::PaperCollision;
  /// Leave out state preparation and the final measurement.
  bool body_only = false;
};

/// State preparation, barrier, then n_steps x [Trotter step, one collision per
/// spin, barrier], then measurement of every spin and boson qubit. Clbit k
/// records system-register qubit k.
Circuit assemble_evolution(const SpinBosonModel& model, const InitialStateSpec& init, const EvolutionSpec& spec);

/// Line-based serialization: a "circuit <width>" header, an optional
/// "roles ..." line, then one gate per line ("rz 2 0.5", "cx 0 1",
/// "measure 3 1", "barrier").
std::string to_text(const Circuit& c);
Circuit from_text(std::string_view text);

}  // namespace sbsim
