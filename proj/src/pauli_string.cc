// Copyright 2026 The Toric QET Authors
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

#include "qet/pauli_string.h"

#include <stdexcept>

namespace qet {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

void check_sizes(const PauliString &p, const PauliString &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli string size mismatch: " + std::to_string(p.num_qubits()) +
                                " vs " + std::to_string(q.num_qubits()));
  }
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::kI:
      return '_';
    case Pauli::kX:
      return 'X';
    case Pauli::kY:
      return 'Y';
    case Pauli::kZ:
      return 'Z';
  }
  return '?';
}

std::complex<double> i_pow(int exponent) {
  switch (mod4(exponent)) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

PauliString::PauliString(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("PauliString needs at least one qubit");
}

PauliString::PauliString(BitVec x_bits, BitVec z_bits, int phase_exp)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_exp_(mod4(phase_exp)) {
  if (x_.size() != z_.size()) throw std::invalid_argument("x/z bit lengths differ");
  if (x_.size() == 0) throw std::invalid_argument("PauliString needs at least one qubit");
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, Pauli p) {
  PauliString out(num_qubits);
  if (qubit >= num_qubits) throw std::out_of_range("qubit index out of range");
  if (p == Pauli::kX || p == Pauli::kY) out.x_.set(qubit);
  if (p == Pauli::kZ || p == Pauli::kY) out.z_.set(qubit);
  // Y = i XZ.
  if (p == Pauli::kY) out.phase_exp_ = 1;
  return out;
}

PauliString PauliString::product(size_t num_qubits, std::span<const size_t> qubits, Pauli p) {
  PauliString out(num_qubits);
  for (size_t q : qubits) out *= single(num_qubits, q, p);
  return out;
}

PauliString PauliString::from_str(std::string_view text) {
  int canonical = 0;
  if (text.starts_with("-i")) {
    canonical = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+i")) {
    canonical = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("i")) {
    canonical = 1;
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    canonical = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  PauliString out(text.size());
  for (size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        out.x_.set(q);
        break;
      case 'Z':
        out.z_.set(q);
        break;
      case 'Y':
        out.x_.set(q);
        out.z_.set(q);
        break;
      default:
        throw std::invalid_argument("bad Pauli character '" + std::string(1, text[q]) + "'");
    }
  }
  out.phase_exp_ = mod4(canonical + static_cast<int>(out.y_count()));
  return out;
}

Pauli PauliString::at(size_t qubit) const {
  bool x = x_.get(qubit);
  bool z = z_.get(qubit);
  if (x && z) return Pauli::kY;
  if (x) return Pauli::kX;
  if (z) return Pauli::kZ;
  return Pauli::kI;
}

size_t PauliString::weight() const { return (x_ | z_).popcount(); }

int PauliString::canonical_phase() const { return mod4(phase_exp_ - static_cast<int>(y_count())); }

PauliString PauliString::unsigned_form() const {
  PauliString out = *this;
  out.phase_exp_ = mod4(static_cast<int>(y_count()));
  return out;
}

PauliString PauliString::adjoint() const {
  // (i^c sigma)^dagger = i^{-c} sigma, and sigma is Hermitian.
  PauliString out = *this;
  int canonical = canonical_phase();
  out.phase_exp_ = mod4(-canonical + static_cast<int>(y_count()));
  return out;
}

PauliString PauliString::scaled(int extra_phase_exp) const {
  PauliString out = *this;
  out.phase_exp_ = mod4(phase_exp_ + extra_phase_exp);
  return out;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
  check_sizes(*this, rhs);
  // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}.
  int sign_flips = static_cast<int>(z_.and_popcount(rhs.x_) % 2);
  phase_exp_ = mod4(phase_exp_ + rhs.phase_exp_ + 2 * sign_flips);
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  return *this;
}

std::string PauliString::str() const {
  static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[canonical_phase()];
  for (size_t q = 0; q < num_qubits(); ++q) out += pauli_char(at(q));
  return out;
}

PauliString mul(const PauliString &p, const PauliString &q) { return p * q; }

bool commutes(const PauliString &p, const PauliString &q) {
  check_sizes(p, q);
  return (p.x_bits().and_popcount(q.z_bits()) + p.z_bits().and_popcount(q.x_bits())) % 2 == 0;
}

}  // namespace qet
