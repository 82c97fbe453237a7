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

#include "sbsim/circuit.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sbsim {

namespace {

struct KindInfo {
  GateKind kind;
  const char* name;
  unsigned arity;
  bool unitary;
  bool native;
  bool has_angle;
};

constexpr KindInfo kKinds[] = {
    {GateKind::I, "id", 1, true, true, false},
    {GateKind::X, "x", 1, true, true, false},
    {GateKind::SX, "sx", 1, true, true, false},
    {GateKind::RZ, "rz", 1, true, true, true},
    {GateKind::RY, "ry", 1, true, false, true},
    {GateKind::CX, "cx", 2, true, true, false},
    {GateKind::CRY, "cry", 2, true, false, true},
    {GateKind::Reset, "reset", 1, false, true, false},
    {GateKind::Measure, "measure", 1, false, true, false},
    {GateKind::Barrier, "barrier", 0, false, true, false},
};

const KindInfo& info(GateKind k) { return kKinds[static_cast<int>(k)]; }

}  // namespace

std::string_view to_string(GateKind k) { return info(k).name; }

std::optional<GateKind> parse_gate_kind(std::string_view s) {
  for (const auto& i : kKinds)
    if (s == i.name) return i.kind;
  return std::nullopt;
}

unsigned arity(GateKind k) { return info(k).arity; }
bool is_unitary(GateKind k) { return info(k).unitary; }
bool is_native(GateKind k) { return info(k).native; }

bool Gate::acts_on(unsigned qubit) const {
  if (kind == GateKind::Barrier) return true;
  for (unsigned x : qubits())
    if (x == qubit) return true;
  return false;
}

Matrix gate_unitary(const Gate& g) {
  const double c = std::cos(g.angle / 2);
  const double s = std::sin(g.angle / 2);
  Matrix m;
  switch (g.kind) {
    case GateKind::I: return Matrix::Identity(2, 2);
    case GateKind::X:
      m = Matrix::Zero(2, 2);
      m(0, 1) = m(1, 0) = 1.0;
      return m;
    case GateKind::SX:
      m.resize(2, 2);
      m << cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5);
      return m;
    case GateKind::RZ:
      m = Matrix::Zero(2, 2);
      m(0, 0) = std::exp(-kI * (g.angle / 2));
      m(1, 1) = std::exp(kI * (g.angle / 2));
      return m;
    case GateKind::RY:
      m.resize(2, 2);
      m << c, -s, s, c;
      return m;
    case GateKind::CX:
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = 1.0;
      m(2, 3) = m(3, 2) = 1.0;
      return m;
    case GateKind::CRY:
      m = Matrix::Identity(4, 4);
      m(2, 2) = c;
      m(2, 3) = -s;
      m(3, 2) = s;
      m(3, 3) = c;
      return m;
    default: throw std::invalid_argument("gate_unitary: " + std::string(to_string(g.kind)) + " is not unitary");
  }
}

std::string_view to_string(QubitRole r) {
  switch (r) {
    case QubitRole::Spin: return "spin";
    case QubitRole::Boson: return "boson";
    case QubitRole::Aux: return "aux";
    case QubitRole::Unused: return "unused";
  }
  return "unused";
}

std::optional<QubitRole> parse_qubit_role(std::string_view s) {
  for (auto r : {QubitRole::Spin, QubitRole::Boson, QubitRole::Aux, QubitRole::Unused})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

Circuit::Circuit(unsigned width, std::vector<QubitRole> roles) : width_(width), roles_(std::move(roles)) {
  if (!roles_.empty() && roles_.size() != width_) throw std::invalid_argument("Circuit: one role per qubit");
}

void Circuit::add(const Gate& g) {
  const auto qs = g.qubits();
  for (std::size_t j = 0; j < qs.size(); ++j) {
    if (qs[j] >= width_) throw std::invalid_argument("Circuit: operand " + std::to_string(qs[j]) + " out of range");
    for (std::size_t k = 0; k < j; ++k)
      if (qs[k] == qs[j]) throw std::invalid_argument("Circuit: repeated operand");
  }
  if (!std::isfinite(g.angle)) throw std::invalid_argument("Circuit: non-finite angle");
  gates_.push_back(g);
}

void Circuit::append(const Circuit& fragment, std::span<const unsigned> qubit_map) {
  if (!qubit_map.empty() && qubit_map.size() != fragment.width())
    throw std::invalid_argument("Circuit::append: map size mismatch");
  if (qubit_map.empty() && fragment.width() > width_) throw std::invalid_argument("Circuit::append: fragment too wide");
  for (Gate g : fragment.gates()) {
    if (!qubit_map.empty())
      for (unsigned j = 0; j < arity(g.kind); ++j) g.q[j] = qubit_map[g.q[j]];
    add(g);
  }
}

std::size_t Circuit::barrier_count() const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += g.kind == GateKind::Barrier;
  return n;
}

unsigned Circuit::clbit_count() const {
  unsigned n = 0;
  for (const auto& g : gates_)
    if (g.kind == GateKind::Measure) n = std::max(n, g.clbit + 1);
  return n;
}

std::vector<std::string> Circuit::problems() const {
  std::vector<std::string> out;
  std::size_t last_barrier = 0;
  bool any_barrier = false;
  for (std::size_t i = 0; i < gates_.size(); ++i)
    if (gates_[i].kind == GateKind::Barrier) {
      last_barrier = i;
      any_barrier = true;
    }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.kind == GateKind::Measure && (!any_barrier || i < last_barrier))
      out.push_back("measure at position " + std::to_string(i) + " precedes the final barrier");
    if (g.kind == GateKind::Reset && !roles_.empty() && roles_[g.q[0]] != QubitRole::Aux)
      out.push_back("reset on non-aux qubit " + std::to_string(g.q[0]));
  }
  return out;
}

Circuit pauli_exponential(const PauliString& term, double angle) {
  if (term.is_identity()) throw std::invalid_argument("pauli_exponential: identity string");
  if (std::abs(term.coefficient().imag()) > kCoefficientTolerance)
    throw std::invalid_argument("pauli_exponential: coefficient must be real");
  const auto w = static_cast<unsigned>(term.width());
  Circuit c(w);
  std::vector<unsigned> active;
  for (unsigned q = 0; q < w; ++q)
    if (term[q] != Pauli::I) active.push_back(q);

  for (unsigned q : active) {
    if (term[q] == Pauli::X) c.ry(q, -M_PI / 2);
    else if (term[q] == Pauli::Y) c.sx(q);
  }
  for (std::size_t j = 0; j + 1 < active.size(); ++j) c.cx(active[j], active[j + 1]);
  c.rz(active.back(), 2.0 * angle * term.coefficient().real());
  for (std::size_t j = active.size() - 1; j-- > 0;) c.cx(active[j], active[j + 1]);
  for (unsigned q : active) {
    if (term[q] == Pauli::X) {
      c.ry(q, M_PI / 2);
    } else if (term[q] == Pauli::Y) {
      // SX^† up to phase
      c.rz(q, M_PI);
      c.sx(q);
      c.rz(q, M_PI);
    }
  }
  return c;
}

Circuit trotter_step(const PauliSum& h, double dt, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("trotter_step: order must be 1 or 2");
  if (!(dt > 0)) throw std::invalid_argument("trotter_step: dt must be positive");
  const auto w = static_cast<unsigned>(h.width());
  Circuit c(w);
  std::vector<PauliString> terms;
  for (const auto& t : h.terms())
    if (!t.is_identity()) terms.push_back(t);
  if (terms.empty()) return c;

  if (order == 1) {
    for (const auto& t : terms) c.append(pauli_exponential(t, dt));
    return c;
  }
  const std::size_t m = terms.size();
  for (std::size_t k = 0; k + 1 < m; ++k) c.append(pauli_exponential(terms[k], dt / 2));
  c.append(pauli_exponential(terms[m - 1], dt));
  for (std::size_t k = m - 1; k-- > 0;) c.append(pauli_exponential(terms[k], dt / 2));
  return c;
}

double collision_angle(double gamma, double dt, RateConvention convention) {
  if (gamma < 0) throw std::invalid_argument("collision: gamma must be >= 0");
  if (dt < 0) throw std::invalid_argument("collision: dt must be >= 0");
  const double rate = effective_rate(gamma, convention);
  return std::asin(std::sqrt(-std::expm1(-rate * dt)));
}

void append_collision(Circuit& c, double theta, unsigned spin, unsigned aux) {
  c.cry(spin, aux, 2.0 * theta);
  c.cx(aux, spin);
  c.reset(aux);
}

Circuit collision_block(double gamma, double dt, RateConvention convention) {
  Circuit c(2, {QubitRole::Spin, QubitRole::Aux});
  append_collision(c, collision_angle(gamma, dt, convention), 0, 1);
  return c;
}

EvolutionLayout EvolutionLayout::make(unsigned n_spins, unsigned boson_qubits) {
  if (n_spins < 1) throw std::invalid_argument("EvolutionLayout: need at least one spin");
  EvolutionLayout l;
  l.width = 2 * n_spins + boson_qubits;
  l.roles.resize(l.width);
  auto place = [&l](QubitRole r, unsigned q) {
    l.roles[q] = r;
    if (r == QubitRole::Spin) l.spins.push_back(q);
    else if (r == QubitRole::Boson) l.boson.push_back(q);
    else l.aux.push_back(q);
    if (r != QubitRole::Aux) l.system.push_back(q);
  };
  unsigned next = 0;
  if (n_spins == 1) {
    for (unsigned b = 0; b < boson_qubits; ++b) place(QubitRole::Boson, next++);
    place(QubitRole::Spin, next++);
    place(QubitRole::Aux, next++);
    return l;
  }
  place(QubitRole::Aux, next++);
  place(QubitRole::Spin, next++);
  for (unsigned b = 0; b < boson_qubits; ++b) place(QubitRole::Boson, next++);
  for (unsigned s = 1; s < n_spins; ++s) {
    place(QubitRole::Spin, next++);
    place(QubitRole::Aux, next++);
  }
  return l;
}

Circuit assemble_evolution(const SpinBosonModel& model, const InitialStateSpec& init, const EvolutionSpec& spec) {
  const auto& p = model.params();
  const EvolutionLayout layout = EvolutionLayout::make(p.n_spins, model.truncation().qubits());
  Circuit c(layout.width, layout.roles);

  if (!spec.body_only) {
    const auto bits = model.initial_bits(init);
    for (std::size_t k = 0; k < bits.size(); ++k)
      if (bits[k]) c.x(layout.system[k]);
    c.barrier();
  }
  const double theta = collision_angle(p.gamma, spec.dt, spec.convention);
  const Circuit step = trotter_step(model.hamiltonian(), spec.dt, spec.order);
  for (unsigned n = 0; n < spec.n_steps; ++n) {
    c.append(step, layout.system);
    for (std::size_t k = 0; k < layout.spins.size(); ++k) append_collision(c, theta, layout.spins[k], layout.aux[k]);
    if (!spec.body_only) c.barrier();
  }
  if (!spec.body_only)
    for (std::size_t k = 0; k < layout.system.size(); ++k) c.measure(layout.system[k], static_cast<unsigned>(k));
  return c;
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "circuit " << c.width() << '\n';
  if (!c.roles().empty()) {
    os << "roles";
    for (auto r : c.roles()) os << ' ' << to_string(r);
    os << '\n';
  }
  char buf[40];
  for (const auto& g : c.gates()) {
    os << to_string(g.kind);
    for (unsigned q : g.qubits()) os << ' ' << q;
    if (g.kind == GateKind::Measure) os << ' ' << g.clbit;
    if (info(g.kind).has_angle) {
      std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
      os << ' ' << buf;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw std::invalid_argument("circuit text line " + std::to_string(line) + ": " + what);
}

unsigned parse_unsigned(std::string_view s, std::size_t line) {
  unsigned v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) parse_error(line, "expected an index, got '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) parse_error(line, "expected a number, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

Circuit from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Circuit> c;
  while (std::getline(is, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!c) {
      if (tok.size() != 2 || tok[0] != "circuit") parse_error(line_no, "expected 'circuit <width>' header");
      c.emplace(parse_unsigned(tok[1], line_no));
      continue;
    }
    if (tok[0] == "roles") {
      std::vector<QubitRole> roles;
      for (std::size_t j = 1; j < tok.size(); ++j) {
        const auto r = parse_qubit_role(tok[j]);
        if (!r) parse_error(line_no, "unknown role '" + tok[j] + "'");
        roles.push_back(*r);
      }
      if (!c->gates().empty()) parse_error(line_no, "roles must precede gates");
      *c = Circuit(c->width(), std::move(roles));
      continue;
    }
    const auto kind = parse_gate_kind(tok[0]);
    if (!kind) parse_error(line_no, "unknown gate '" + tok[0] + "'");
    const unsigned n = arity(*kind);
    const std::size_t expected = 1 + n + (*kind == GateKind::Measure) + (info(*kind).has_angle ? 1 : 0);
    if (tok.size() != expected) parse_error(line_no, "wrong operand count for " + tok[0]);
    Gate g;
    g.kind = *kind;
    for (unsigned j = 0; j < n; ++j) g.q[j] = parse_unsigned(tok[1 + j], line_no);
    if (*kind == GateKind::Measure) g.clbit = parse_unsigned(tok[2], line_no);
    if (info(*kind).has_angle) g.angle = parse_double(tok.back(), line_no);
    try {
      c->add(g);
    } catch (const std::invalid_argument& e) {
      parse_error(line_no, e.what());
    }
  }
  if (!c) throw std::invalid_argument("circuit text: missing header");
  return *c;
}

}  // namespace sbsim
