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

#include "sbsim/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace sbsim {

char to_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
  }
}

PauliString::PauliString(std::size_t width, cplx coefficient)
    : letters_(width, Pauli::I), coefficient_(coefficient) {}

PauliString::PauliString(std::vector<Pauli> letters, cplx coefficient)
    : letters_(std::move(letters)), coefficient_(coefficient) {}

PauliString::PauliString(std::string_view letters, cplx coefficient) : coefficient_(coefficient) {
  letters_.reserve(letters.size());
  for (char c : letters) letters_.push_back(pauli_from_char(c));
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::string PauliString::pattern() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(to_char(p));
  return s;
}

namespace {

// Single-site product a·b = phase · result.
std::pair<cplx, Pauli> site_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {1.0, b};
  if (b == Pauli::I) return {1.0, a};
  if (a == b) return {1.0, Pauli::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto result = static_cast<Pauli>(6 - ia - ib);  // the third letter
  // X·Y = iZ, Y·Z = iX, Z·X = iY are the cyclic orders.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? kI : -kI, result};
}

}  // namespace

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.width() != b.width()) throw std::invalid_argument("multiply: width mismatch");
  PauliString out(a.width(), a.coefficient() * b.coefficient());
  cplx phase = 1.0;
  for (std::size_t q = 0; q < a.width(); ++q) {
    const auto [ph, letter] = site_product(a[q], b[q]);
    phase *= ph;
    out.set(q, letter);
  }
  out.set_coefficient(out.coefficient() * phase);
  return out;
}

void PauliSum::add(PauliString term) {
  if (terms_.empty() && width_ == 0) width_ = term.width();
  if (term.width() != width_) throw std::invalid_argument("PauliSum::add: width mismatch");
  terms_.push_back(std::move(term));
}

void PauliSum::add(const PauliSum& other) {
  if (other.empty()) return;
  for (const auto& t : other.terms()) add(t);
}

PauliSum PauliSum::scaled(cplx factor) const {
  PauliSum out(width_);
  for (auto t : terms_) {
    t.set_coefficient(t.coefficient() * factor);
    out.add(std::move(t));
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(width_);
  for (auto t : terms_) {
    t.set_coefficient(std::conj(t.coefficient()));
    out.add(std::move(t));
  }
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  const PauliSum c = canonicalize(*this, tol);
  return std::all_of(c.terms().begin(), c.terms().end(),
                     [tol](const PauliString& t) { return std::abs(t.coefficient().imag()) < tol; });
}

std::uint64_t PauliSum::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(width_);
  const PauliSum canon = canonicalize(*this);
  for (const auto& t : canon.terms()) {
    for (Pauli p : t.letters()) mix(static_cast<std::uint64_t>(p));
    mix(static_cast<std::uint64_t>(std::llround(t.coefficient().real() * 1e10)));
    mix(static_cast<std::uint64_t>(std::llround(t.coefficient().imag() * 1e10)));
  }
  return h;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (!a.empty() && !b.empty() && a.width() != b.width())
    throw std::invalid_argument("PauliSum +: width mismatch");
  PauliSum out(a.empty() ? b.width() : a.width());
  out.add(a);
  out.add(b);
  return out;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.width() != b.width()) throw std::invalid_argument("PauliSum *: width mismatch");
  PauliSum out(a.width());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) out.add(multiply(x, y));
  return out;
}

PauliSum canonicalize(const PauliSum& s, double tol) {
  std::map<std::vector<Pauli>, cplx> merged;
  for (const auto& t : s.terms()) merged[t.letters()] += t.coefficient();
  PauliSum out(s.width());
  // std::map orders keys lexicographically with I < X < Y < Z.
  for (const auto& [letters, c] : merged)
    if (std::abs(c) >= tol) out.add(PauliString(letters, c));
  return out;
}

PauliSum drop_identity(const PauliSum& s) {
  PauliSum out(s.width());
  for (const auto& t : s.terms())
    if (!t.is_identity()) out.add(t);
  return out;
}

Matrix to_dense(const PauliString& p) {
  const std::size_t w = p.width();
  if (w > kMaxDenseWidth) throw std::length_error("to_dense: register too wide");
  const std::size_t dim = std::size_t{1} << w;
  std::size_t flip = 0;
  for (std::size_t q = 0; q < w; ++q)
    if (p[q] == Pauli::X || p[q] == Pauli::Y) flip |= std::size_t{1} << (w - 1 - q);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    cplx amp = p.coefficient();
    for (std::size_t q = 0; q < w; ++q) {
      const bool bit = (col >> (w - 1 - q)) & 1u;
      switch (p[q]) {
        case Pauli::Y: amp *= bit ? -kI : kI; break;
        case Pauli::Z: if (bit) amp = -amp; break;
        default: break;
      }
    }
    m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) = amp;
  }
  return m;
}

Matrix to_dense(const PauliSum& s) {
  if (s.width() > kMaxDenseWidth) throw std::length_error("to_dense: register too wide");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << s.width());
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& t : s.terms()) m += to_dense(t);
  return m;
}

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string to_string(const PauliString& p) {
  const cplx c = p.coefficient();
  std::string coeff;
  if (std::abs(c.imag()) < kCoefficientTolerance) coeff = format_number(c.real());
  else if (std::abs(c.real()) < kCoefficientTolerance) coeff = format_number(c.imag()) + "i";
  else coeff = "(" + format_number(c.real()) + (c.imag() < 0 ? "-" : "+") + format_number(std::abs(c.imag())) + "i)";
  return coeff + " " + p.pattern();
}

std::string to_string(const PauliSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < s.terms().size(); ++k) {
    const PauliString& t = s.terms()[k];
    std::string piece = to_string(t);
    if (k > 0) {
      if (!piece.empty() && piece[0] == '-') out += " - " + piece.substr(1);
      else out += " + " + piece;
    } else {
      out += piece;
    }
  }
  return out;
}

}  // namespace sbsim
