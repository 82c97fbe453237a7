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
#include <string>
#include <string_view>
#include <vector>

#include "sbsim/linalg.hpp"

namespace sbsim {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis with a complex weight.
///
/// Qubit 0 is the leftmost tensor factor, so "XZ" is X on qubit 0 and Z on
/// qubit 1, and qubit 0 is the most significant bit of a basis-state index.
/// This ordering is used everywhere in the library.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t width, cplx coefficient = 1.0);
  PauliString(std::vector<Pauli> letters, cplx coefficient);
  /// Parses a letter pattern such as "XIZ".
  PauliString(std::string_view letters, cplx coefficient);

  std::size_t width() const { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  const std::vector<Pauli>& letters() const { return letters_; }
  cplx coefficient() const { return coefficient_; }

  void set(std::size_t q, Pauli p) { letters_.at(q) = p; }
  void set_coefficient(cplx c) { coefficient_ = c; }

  bool is_identity() const;
  /// Number of non-identity letters.
  std::size_t weight() const;
  std::string pattern() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> letters_;
  cplx coefficient_{1.0, 0.0};
};

/// Product a·b with the accumulated single-site phases folded into the
/// coefficient. Throws std::invalid_argument on width mismatch.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Weighted sum of Pauli strings on a fixed register width.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(PauliString term);
  void add(const PauliSum& other);

  PauliSum scaled(cplx factor) const;
  /// Conjugate transpose (conjugates every coefficient).
  PauliSum adjoint() const;

  /// True if every coefficient of the canonical form is real to `tol`.
  bool is_hermitian(double tol = 1e-12) const;

  /// Stable 64-bit fingerprint of the canonical form; equal sums share it.
  std::uint64_t fingerprint() const;

 private:
  std::size_t width_ = 0;
  std::vector<PauliString> terms_;
};

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

inline constexpr double kCoefficientTolerance = 1e-12;

/// Merges duplicate letter patterns, drops |c| < tol and sorts terms
/// lexicographically by pattern (I < X < Y < Z).
PauliSum canonicalize(const PauliSum& s, double tol = kCoefficientTolerance);

/// Sum with every identity-only term removed.
PauliSum drop_identity(const PauliSum& s);

inline constexpr std::size_t kMaxDenseWidth = 8;

/// Dense 2^w x 2^w realization. Throws std::length_error past kMaxDenseWidth.
Matrix to_dense(const PauliString& p);
Matrix to_dense(const PauliSum& s);

/// Human-readable rendering, e.g. "-1.41421 XXZ + 0.25 IIX".
std::string to_string(const PauliString& p);
std::string to_string(const PauliSum& s);

}  // namespace sbsim
