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

#include <gtest/gtest.h>

#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "sbsim/model.hpp"
#include "sbsim/transpiler.hpp"

namespace sbsim {
namespace {

using testing::Gen;

// Places logical amplitudes on device qubits layout[l]; others are |0>.
Vector place(const Vector& psi, unsigned w, const std::vector<unsigned>& layout, unsigned n) {
  Vector out = Vector::Zero(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    std::size_t idx = 0;
    for (unsigned l = 0; l < w; ++l)
      if ((i >> (w - 1 - l)) & 1) idx |= std::size_t{1} << (n - 1 - layout[l]);
    out(static_cast<Eigen::Index>(idx)) = psi(i);
  }
  return out;
}

bool same_up_to_phase(const Vector& a, const Vector& b, double tol) {
  const cplx overlap = a.dot(b);
  return std::abs(std::abs(overlap) - 1.0) < tol && (a - b * (std::abs(overlap) / overlap)).norm() < 1e-6;
}

void expect_routing_preserves_action(const Circuit& logical, const RoutedCircuit& r, const CouplingMap& map,
                                     Gen& g) {
  const unsigned w = logical.width();
  const unsigned n = r.circuit.width();
  for (const auto& gate : r.circuit.gates())
    if (arity(gate.kind) == 2) EXPECT_TRUE(map.adjacent(gate.q[0], gate.q[1]));
  Vector psi = g.vector(Eigen::Index{1} << w);
  psi.normalize();
  const Vector want = place(testing::circuit_unitary(logical) * psi, w, r.final_layout, n);
  const Vector got = testing::circuit_unitary(r.circuit) * place(psi, w, r.initial_layout, n);
  EXPECT_TRUE(same_up_to_phase(got, want, 1e-9));
}

TEST(Coupling, JakartaDistances) {
  const CouplingMap j = CouplingMap::jakarta();
  EXPECT_EQ(j.size(), 7u);
  EXPECT_TRUE(j.adjacent(1, 0));
  EXPECT_FALSE(j.adjacent(0, 2));
  EXPECT_EQ(j.distance(0, 6), 4u);
  EXPECT_EQ(j.shortest_path(0, 4), (std::vector<unsigned>{0, 1, 3, 5, 4}));
  EXPECT_THROW(CouplingMap(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(CouplingMap(3, {{0, 1}}).shortest_path(0, 2), std::invalid_argument);
  EXPECT_THROW(j.distance(0, 7), std::out_of_range);
}

TEST(Synthesis, RandomUnitariesUpToPhase) {
  Gen g(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix u = g.unitary(2);
    const auto gates = synthesize_1q(u, 0);
    Circuit c(1);
    for (const auto& gate : gates) {
      EXPECT_TRUE(is_native(gate.kind));
      c.add(gate);
    }
    EXPECT_LE(gates.size(), 5u);
    EXPECT_TRUE(equal_up_to_phase(testing::circuit_unitary(c), u, 1e-10));
  }
}

TEST(Synthesis, SpecialAngles) {
  EXPECT_TRUE(synthesize_1q(Matrix::Identity(2, 2), 0).empty());
  const auto z = synthesize_1q(gate_unitary({GateKind::RZ, {0, 0}, 0.4}), 0);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].kind, GateKind::RZ);
  const auto x = synthesize_1q(gate_unitary({GateKind::X, {0, 0}}), 0);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0].kind, GateKind::X);
  const auto sx = synthesize_1q(gate_unitary({GateKind::SX, {0, 0}}), 0);
  EXPECT_EQ(sx.size(), 1u);
  for (double theta : {std::numbers::pi / 2, std::numbers::pi, 1e-9}) {
    const Matrix u = gate_unitary({GateKind::RY, {0, 0}, theta});
    Circuit c(1);
    for (const auto& gate : synthesize_1q(u, 0)) c.add(gate);
    EXPECT_TRUE(equal_up_to_phase(testing::circuit_unitary(c), u, 1e-10)) << theta;
  }
}

TEST(Decompose, NativeGatesOnlyAndEquivalent) {
  Gen g(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit c = g.circuit(3, 25);
    const Circuit d = decompose_native(c);
    for (const auto& gate : d.gates()) EXPECT_TRUE(is_native(gate.kind));
    EXPECT_TRUE(equal_up_to_phase(testing::circuit_unitary(d), testing::circuit_unitary(c), 1e-9));
  }
}

TEST(Decompose, CollisionPairUsesTwoCx) {
  Gen g(43);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(2);
    c.cry(0, 1, g.uniform(0, std::numbers::pi));
    c.cx(1, 0);
    const Circuit d = decompose_native(c);
    EXPECT_EQ(count_gates(d).cx, 2u);
    EXPECT_TRUE(equal_up_to_phase(testing::circuit_unitary(d), testing::circuit_unitary(c), 1e-10));
  }
}

TEST(Optimize, PreservesUnitaryAndShrinks) {
  Gen g(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit c = decompose_native(g.circuit(3, 40));
    const Circuit o = optimize_1q(c);
    EXPECT_LE(o.size(), c.size());
    EXPECT_TRUE(equal_up_to_phase(testing::circuit_unitary(o), testing::circuit_unitary(c), 1e-9));
  }
}

TEST(Optimize, CancelsCxPairsButNotAcrossBarriers) {
  Circuit c(2);
  c.cx(0, 1);
  c.cx(0, 1);
  EXPECT_EQ(optimize_1q(c).size(), 0u);
  Circuit b(2);
  b.cx(0, 1);
  b.barrier();
  b.cx(0, 1);
  b.sx(0);
  b.barrier();
  b.sx(0);
  const Circuit ob = optimize_1q(b);
  EXPECT_EQ(count_gates(ob).cx, 2u);
  EXPECT_EQ(count_gates(ob).single_qubit, 2u);
}

TEST(Optimize, ResetBlocksMerging) {
  Circuit c(1);
  c.x(0);
  c.reset(0);
  c.x(0);
  const Circuit o = optimize_1q(c);
  EXPECT_EQ(o.size(), 3u);
}

TEST(Route, RandomCircuitsOnJakarta) {
  Gen g(45);
  const CouplingMap map = CouplingMap::jakarta();
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned w = 2 + g.index(4);
    const Circuit c = g.circuit(w, 20, true);
    auto layout = g.distinct(w, map.size());
    const RoutedCircuit r = route(c, map, layout);
    expect_routing_preserves_action(c, r, map, g);
  }
}

TEST(Route, InputValidation) {
  const CouplingMap map = CouplingMap::line(3);
  Circuit c(2);
  EXPECT_THROW(route(c, map, {0}), std::invalid_argument);
  EXPECT_THROW(route(c, map, {1, 1}), std::invalid_argument);
  EXPECT_THROW(route(Circuit(4), map, {0, 1, 2, 3}), std::invalid_argument);
}

TEST(Route, BarrierLayoutsTrackSwaps) {
  const CouplingMap map = CouplingMap::line(3);
  Circuit c(3);
  c.barrier();
  c.cx(0, 2);
  c.barrier();
  const RoutedCircuit r = route(c, map, {0, 1, 2});
  ASSERT_EQ(r.barrier_layouts.size(), 2u);
  EXPECT_EQ(r.barrier_layouts[0], (std::vector<unsigned>{0, 1, 2}));
  EXPECT_EQ(r.barrier_layouts[1], r.final_layout);
  EXPECT_EQ(r.final_layout, (std::vector<unsigned>{1, 0, 2}));
  EXPECT_EQ(count_gates(r.circuit).cx, 4u);
}

TEST(Compact, DropsUntouchedQubits) {
  const CouplingMap map = CouplingMap::jakarta();
  Circuit c(2);
  c.cx(0, 1);
  const RoutedCircuit r = compact(route(c, map, {5, 6}));
  EXPECT_EQ(r.circuit.width(), 2u);
  EXPECT_EQ(r.device_qubits, (std::vector<unsigned>{5, 6}));
  EXPECT_EQ(r.initial_layout, (std::vector<unsigned>{0, 1}));
}

TEST(Layout, EvolutionBodyPlacesCollisionsOnEdges) {
  for (unsigned spins : {1u, 2u}) {
    ModelParams p;
    p.n_spins = spins;
    const SpinBosonModel m(p, CodeKind::Gray);
    const Circuit body = assemble_evolution(m, default_initial_state(spins), {1, 0.2, 1, RateConvention::PaperCollision, true});
    const CouplingMap map = CouplingMap::jakarta();
    const auto layout = choose_layout(body, map);
    for (const auto& g : body.gates())
      if (g.kind == GateKind::CRY) EXPECT_TRUE(map.adjacent(layout[g.q[0]], layout[g.q[1]]));
    EXPECT_EQ(layout, choose_layout(body, map));  // deterministic
  }
}

TEST(Transpile, FullEvolutionStepIsEquivalentOnTheSystem) {
  Gen g(46);
  ModelParams p;
  p.levels = 2;
  p.gamma = 0.0;  // a unitary collision keeps the comparison pure
  const SpinBosonModel m(p, CodeKind::Gray);
  Circuit body = assemble_evolution(m, default_initial_state(1), {2, 0.2, 2, RateConvention::PaperCollision, true});
  Circuit unitary_part(body.width());
  for (const auto& gate : body.gates())
    if (gate.kind != GateKind::Reset) unitary_part.add(gate);
  const CouplingMap map = CouplingMap::jakarta();
  const RoutedCircuit r = transpile(unitary_part, map, choose_layout(body, map));
  expect_routing_preserves_action(unitary_part, r, map, g);
}

TEST(Counts, RejectsNonNative) {
  Circuit c(1);
  c.ry(0, 0.1);
  EXPECT_THROW(count_gates(c), std::invalid_argument);
}

}  // namespace
}  // namespace sbsim
