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

#include "sbsim/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>

namespace sbsim {

CouplingMap::CouplingMap(unsigned n_qubits, std::vector<std::pair<unsigned, unsigned>> edges)
    : n_(n_qubits), edges_(std::move(edges)), neighbors_(n_qubits) {
  for (auto [a, b] : edges_) {
    if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("CouplingMap: bad edge");
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& nb : neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
  dist_.assign(n_, std::vector<unsigned>(n_, kInf));
  for (unsigned s = 0; s < n_; ++s) {
    std::queue<unsigned> q;
    dist_[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const unsigned u = q.front();
      q.pop();
      for (unsigned v : neighbors_[u])
        if (dist_[s][v] == kInf) {
          dist_[s][v] = dist_[s][u] + 1;
          q.push(v);
        }
    }
  }
}

CouplingMap CouplingMap::jakarta() { return CouplingMap(7, {{0, 1}, {1, 2}, {1, 3}, {3, 5}, {4, 5}, {5, 6}}); }

CouplingMap CouplingMap::line(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned q = 0; q + 1 < n; ++q) e.emplace_back(q, q + 1);
  return CouplingMap(n, std::move(e));
}

bool CouplingMap::adjacent(unsigned a, unsigned b) const { return distance(a, b) == 1; }

unsigned CouplingMap::distance(unsigned a, unsigned b) const {
  if (a >= n_ || b >= n_) throw std::out_of_range("CouplingMap: qubit out of range");
  return dist_[a][b];
}

std::vector<unsigned> CouplingMap::shortest_path(unsigned a, unsigned b) const {
  const unsigned d = distance(a, b);
  if (d == std::numeric_limits<unsigned>::max()) throw std::invalid_argument("CouplingMap: qubits not connected");
  std::vector<unsigned> path{a};
  unsigned cur = a;
  while (cur != b) {
    for (unsigned v : neighbors_[cur])
      if (dist_[v][b] + 1 == dist_[cur][b]) {
        cur = v;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

void push_rz(std::vector<Gate>& out, unsigned q, double angle, double tol) {
  const double a = wrap_angle(angle);
  if (std::abs(a) > tol) out.push_back({GateKind::RZ, {q, 0}, a});
}

Matrix rx(double t) {
  Matrix m(2, 2);
  m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Matrix ry(double t) { return gate_unitary({GateKind::RY, {0, 0}, t}); }
Matrix rz(double t) { return gate_unitary({GateKind::RZ, {0, 0}, t}); }

// exp(-i (pi/3) (X + Y + Z) / sqrt 3): cycles X -> Y -> Z -> X.
Matrix cycle_xyz() {
  const double s = std::sin(kPi / 3) / std::sqrt(3.0);
  Matrix m(2, 2);
  m << cplx(std::cos(kPi / 3), -s), cplx(-s, -s), cplx(s, -s), cplx(std::cos(kPi / 3), s);
  return m;
}

void append_all(Circuit& c, const std::vector<Gate>& gates) {
  for (const auto& g : gates) c.add(g);
}

void append_collision_block(Circuit& out, unsigned s, unsigned a, double theta) {
  const Matrix v = cycle_xyz();
  append_all(out, synthesize_1q(v * ry(theta), a));
  out.cx(s, a);
  out.sx(s);
  append_all(out, synthesize_1q(rz(-theta), a));
  out.cx(s, a);
  append_all(out, synthesize_1q(rx(-kPi / 2), s));
  append_all(out, synthesize_1q(rz(-kPi / 2) * v.adjoint(), a));
}

}  // namespace

std::vector<Gate> synthesize_1q(const Matrix& u, unsigned q, double tol) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("synthesize_1q: expected a 2x2 matrix");
  const cplx det = u.determinant();
  if (std::abs(std::abs(det) - 1.0) > 1e-8) throw std::invalid_argument("synthesize_1q: matrix is not unitary");
  const Matrix v = u / std::sqrt(det);
  const cplx a = v(0, 0);
  const cplx b = v(1, 0);
  const double theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  std::vector<Gate> out;

  if (std::abs(b) < tol) {
    push_rz(out, q, -2.0 * std::arg(a), tol);
    return out;
  }
  const double diff = 2.0 * std::arg(b);  // phi - lambda
  if (std::abs(a) < tol) {
    push_rz(out, q, kPi - diff, tol);
    out.push_back({GateKind::X, {q, 0}});
    return out;
  }
  const double sum = -2.0 * std::arg(a);  // phi + lambda
  const double phi = 0.5 * (sum + diff);
  const double lambda = 0.5 * (sum - diff);
  if (std::abs(theta - kPi / 2) < tol) {
    push_rz(out, q, lambda - kPi / 2, tol);
    out.push_back({GateKind::SX, {q, 0}});
    push_rz(out, q, phi + kPi / 2, tol);
    return out;
  }
  push_rz(out, q, lambda, tol);
  out.push_back({GateKind::SX, {q, 0}});
  push_rz(out, q, theta + kPi, tol);
  out.push_back({GateKind::SX, {q, 0}});
  push_rz(out, q, phi + kPi, tol);
  return out;
}

Circuit decompose_native(const Circuit& c) {
  Circuit out(c.width(), c.roles());
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::RY: append_all(out, synthesize_1q(gate_unitary(g), g.q[0])); break;
      case GateKind::CRY: {
        const unsigned ctl = g.q[0], tgt = g.q[1];
        if (i + 1 < gates.size() && gates[i + 1].kind == GateKind::CX && gates[i + 1].q[0] == tgt &&
            gates[i + 1].q[1] == ctl) {
          append_collision_block(out, ctl, tgt, g.angle / 2);
          ++i;
          break;
        }
        out.cx(ctl, tgt);
        append_all(out, synthesize_1q(ry(-g.angle / 2), tgt));
        out.cx(ctl, tgt);
        append_all(out, synthesize_1q(ry(g.angle / 2), tgt));
        break;
      }
      default: out.add(g); break;
    }
  }
  return out;
}

Circuit optimize_1q(const Circuit& c) {
  const unsigned w = c.width();
  std::vector<Gate> out;
  std::vector<bool> alive;
  std::vector<std::vector<std::size_t>> history(w);
  std::vector<std::optional<Matrix>> pending(w);

  auto emit = [&](const Gate& g) {
    out.push_back(g);
    alive.push_back(true);
    if (g.kind == GateKind::Barrier)
      for (auto& h : history) h.push_back(out.size() - 1);
    else
      for (unsigned q : g.qubits()) history[q].push_back(out.size() - 1);
  };
  auto flush = [&](unsigned q) {
    if (!pending[q]) return;
    for (const auto& g : synthesize_1q(*pending[q], q)) emit(g);
    pending[q].reset();
  };

  for (const Gate& g : c.gates()) {
    if (is_unitary(g.kind) && arity(g.kind) == 1) {
      const unsigned q = g.q[0];
      const Matrix u = gate_unitary(g);
      pending[q] = pending[q] ? Matrix(u * *pending[q]) : u;
      continue;
    }
    if (g.kind == GateKind::Barrier) {
      for (unsigned q = 0; q < w; ++q) flush(q);
    } else {
      for (unsigned q : g.qubits()) flush(q);
    }
    if (g.kind == GateKind::CX) {
      auto& hc = history[g.q[0]];
      auto& ht = history[g.q[1]];
      if (!hc.empty() && !ht.empty() && hc.back() == ht.back() && out[hc.back()] == g) {
        alive[hc.back()] = false;
        hc.pop_back();
        ht.pop_back();
        continue;
      }
    }
    emit(g);
  }
  for (unsigned q = 0; q < w; ++q) flush(q);

  Circuit result(w, c.roles());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (alive[i]) result.add(out[i]);
  return result;
}

RoutedCircuit route(const Circuit& c, const CouplingMap& map, const std::vector<unsigned>& layout) {
  const unsigned w = c.width();
  const unsigned n = map.size();
  if (w > n) throw std::invalid_argument("route: circuit wider than device");
  if (layout.size() != w) throw std::invalid_argument("route: layout size mismatch");
  constexpr unsigned kNone = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> l2p = layout;
  std::vector<unsigned> p2l(n, kNone);
  for (unsigned l = 0; l < w; ++l) {
    if (l2p[l] >= n || p2l[l2p[l]] != kNone) throw std::invalid_argument("route: layout is not injective");
    p2l[l2p[l]] = l;
  }

  std::vector<QubitRole> roles;
  if (!c.roles().empty()) {
    roles.assign(n, QubitRole::Unused);
    for (unsigned l = 0; l < w; ++l) roles[l2p[l]] = c.roles()[l];
  }
  RoutedCircuit r{Circuit(n, roles), layout, {}, {}, {}};
  for (unsigned p = 0; p < n; ++p) r.device_qubits.push_back(p);

  for (Gate g : c.gates()) {
    if (g.kind == GateKind::Barrier) {
      r.barrier_layouts.push_back(l2p);
      r.circuit.add(g);
      continue;
    }
    if (arity(g.kind) == 2) {
      const unsigned a = g.q[0], b = g.q[1];
      while (!map.adjacent(l2p[a], l2p[b])) {
        const unsigned pa = l2p[a];
        const unsigned next = map.shortest_path(pa, l2p[b])[1];
        r.circuit.cx(pa, next);
        r.circuit.cx(next, pa);
        r.circuit.cx(pa, next);
        const unsigned other = p2l[next];
        p2l[next] = a;
        l2p[a] = next;
        p2l[pa] = other;
        if (other != kNone) l2p[other] = pa;
      }
    }
    for (unsigned j = 0; j < arity(g.kind); ++j) g.q[j] = l2p[g.q[j]];
    r.circuit.add(g);
  }
  r.final_layout = l2p;
  return r;
}

RoutedCircuit compact(const RoutedCircuit& r) {
  const unsigned n = r.circuit.width();
  std::vector<bool> used(n, false);
  for (const auto& g : r.circuit.gates())
    for (unsigned q : g.qubits()) used[q] = true;
  for (unsigned p : r.initial_layout) used[p] = true;
  for (unsigned p : r.final_layout) used[p] = true;
  for (const auto& l : r.barrier_layouts)
    for (unsigned p : l) used[p] = true;

  constexpr unsigned kNone = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> index(n, kNone);
  RoutedCircuit out;
  std::vector<QubitRole> roles;
  for (unsigned p = 0; p < n; ++p)
    if (used[p]) {
      index[p] = static_cast<unsigned>(out.device_qubits.size());
      out.device_qubits.push_back(r.device_qubits.empty() ? p : r.device_qubits[p]);
      if (!r.circuit.roles().empty()) roles.push_back(r.circuit.roles()[p]);
    }
  out.circuit = Circuit(static_cast<unsigned>(out.device_qubits.size()), roles);
  for (Gate g : r.circuit.gates()) {
    for (unsigned j = 0; j < arity(g.kind); ++j) g.q[j] = index[g.q[j]];
    out.circuit.add(g);
  }
  auto remap = [&index](const std::vector<unsigned>& l) {
    std::vector<unsigned> m;
    for (unsigned p : l) m.push_back(index[p]);
    return m;
  };
  out.initial_layout = remap(r.initial_layout);
  out.final_layout = remap(r.final_layout);
  for (const auto& l : r.barrier_layouts) out.barrier_layouts.push_back(remap(l));
  return out;
}

GateCount count_gates(const Circuit& c) {
  GateCount n;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::I:
      case GateKind::X:
      case GateKind::SX:
      case GateKind::RZ: ++n.single_qubit; break;
      case GateKind::CX: ++n.cx; break;
      case GateKind::Reset:
      case GateKind::Measure:
      case GateKind::Barrier: break;
      default:
        throw std::invalid_argument("count_gates: non-native gate " + std::string(to_string(g.kind)));
    }
  }
  return n;
}

std::vector<unsigned> choose_layout(const Circuit& c, const CouplingMap& map) {
  const Circuit native = decompose_native(c);
  const unsigned w = c.width();
  const unsigned n = map.size();
  if (w > n) throw std::invalid_argument("choose_layout: circuit wider than device");

  std::vector<std::pair<unsigned, unsigned>> must_touch;
  for (const auto& g : c.gates())
    if (g.kind == GateKind::CRY) must_touch.emplace_back(g.q[0], g.q[1]);

  std::vector<unsigned> best;
  std::size_t best_cx = std::numeric_limits<std::size_t>::max();
  std::vector<unsigned> current(w);
  std::vector<bool> taken(n, false);

  auto feasible = [&](unsigned assigned) {
    for (auto [s, a] : must_touch)
      if (s < assigned && a < assigned && !map.adjacent(current[s], current[a])) return false;
    return true;
  };
  auto search = [&](auto&& self, unsigned l) -> void {
    if (l == w) {
      const std::size_t cx = count_gates(route(native, map, current).circuit).cx;
      if (cx < best_cx) {
        best_cx = cx;
        best = current;
      }
      return;
    }
    for (unsigned p = 0; p < n; ++p) {
      if (taken[p]) continue;
      current[l] = p;
      if (!feasible(l + 1)) continue;
      taken[p] = true;
      self(self, l + 1);
      taken[p] = false;
    }
  };
  search(search, 0);
  if (best.empty()) throw std::invalid_argument("choose_layout: no layout satisfies the adjacency constraints");
  return best;
}

RoutedCircuit transpile(const Circuit& c, const CouplingMap& map, const std::vector<unsigned>& layout) {
  RoutedCircuit r = route(decompose_native(c), map, layout);
  r.circuit = optimize_1q(r.circuit);
  return r;
}

}  // namespace sbsim
