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

#include <utility>
#include <vector>

#include "sbsim/circuit.hpp"
#include "sbsim/linalg.hpp"

namespace sbsim {

/// Undirected device connectivity.
class CouplingMap {
 public:
  CouplingMap(unsigned n_qubits, std::vector<std::pair<unsigned, unsigned>> edges);

  /// 7-qubit H-shaped map: 0-1, 1-2, 1-3, 3-5, 4-5, 5-6.
  static CouplingMap jakarta();
  /// Path 0-1-...-(n-1).
  static CouplingMap line(unsigned n);

  unsigned size() const { return n_; }
  const std::vector<std::pair<unsigned, unsigned>>& edges() const { return edges_; }
  bool adjacent(unsigned a, unsigned b) const;
  unsigned distance(unsigned a, unsigned b) const;
  /// Shortest path a..b; among equal-length paths the one visiting
  /// lower-indexed qubits first.
  std::vector<unsigned> shortest_path(unsigned a, unsigned b) const;

 private:
  unsigned n_;
  std::vector<std::pair<unsigned, unsigned>> edges_;
  std::vector<std::vector<unsigned>> neighbors_;
  std::vector<std::vector<unsigned>> dist_;
};

struct GateCount {
  std::size_t single_qubit = 0;
  std::size_t cx = 0;

  friend bool operator==(const GateCount&, const GateCount&) = default;
};

/// Native ZSX sequence for a single-qubit unitary, in time order, on qubit
/// `q`. Uses no SX for diagonal input, one for a quarter turn, else two; RZ
/// angles that are multiples of 2 pi are dropped.
std::vector<Gate> synthesize_1q(const Matrix& u, unsigned q, double tol = 1e-12);

/// Rewrites RY and CRY into {CX, RZ, SX, X}. A CRY immediately followed by a
/// CX from its target back to its control (the collision pattern) becomes a
/// two-CX block; other CRYs use two CX and target rotations.
Circuit decompose_native(const Circuit& c);

/// Merges runs of single-qubit gates between multi-qubit operations and
/// barriers into synthesize_1q output, and cancels back-to-back identical
/// CX pairs.
Circuit optimize_1q(const Circuit& c);

/// A circuit placed on device qubits. Layout vectors map logical qubit to
/// device qubit (or, after compaction, to simulator qubit).
struct RoutedCircuit {
  Circuit circuit;
  std::vector<unsigned> initial_layout;
  std::vector<unsigned> final_layout;
  /// Layout in force at each barrier, in barrier order.
  std::vector<std::vector<unsigned>> barrier_layouts;
  /// Device qubit of each circuit qubit.
  std::vector<unsigned> device_qubits;
};

/// Greedy shortest-path router: before each CX on non-adjacent qubits the
/// control is swapped one step along the shortest path until adjacent. SWAPs
/// are emitted as 3 CX.
RoutedCircuit route(const Circuit& c, const CouplingMap& map, const std::vector<unsigned>& layout);

/// Drops device qubits no gate touches and renumbers the rest in ascending
/// device order.
RoutedCircuit compact(const RoutedCircuit& r);

/// Counts native gates, ignoring barriers, resets and measurements. Throws
/// std::invalid_argument on non-native gates.
GateCount count_gates(const Circuit& c);

/// Picks the injective logical->device map, subject to every spin sharing an
/// edge with its aux, that routes `c` with the fewest CX (ties go to the
/// lexicographically smallest map).
std::vector<unsigned> choose_layout(const Circuit& c, const CouplingMap& map);

/// decompose_native, route, optimize_1q.
RoutedCircuit transpile(const Circuit& c, const CouplingMap& map, const std::vector<unsigned>& layout);

}  // namespace sbsim
