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

#ifndef QET_PAULI_STRING_H_
#define QET_PAULI_STRING_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "qet/bitvec.h"

namespace qet {

enum class Pauli : uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

char pauli_char(Pauli p);

/// i^exponent for exponent taken mod 4.
std::complex<double> i_pow(int exponent);

/// A phased tensor product of single-qubit Paulis over a fixed qubit count.
///
/// The stored operator is  i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}, with X
/// placed to the left of Z on every qubit. A qubit with both bits set
/// therefore holds XZ = -iY. The "canonical" (Y-explicit) phase of a string
/// is the exponent c with  operator = i^c * prod_q sigma_q,  where each
/// sigma_q is one of I, X, Y, Z; it equals phase_exp - (#Y) mod 4.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on num_qubits qubits.
  explicit PauliString(size_t num_qubits);
  PauliString(BitVec x_bits, BitVec z_bits, int phase_exp = 0);

  /// sigma^p on one qubit, identity elsewhere. Canonical phase is 0.
  static PauliString single(size_t num_qubits, size_t qubit, Pauli p);
  /// prod_{q in qubits} sigma^p_q. Repeated qubits cancel (sigma^2 = I).
  static PauliString product(size_t num_qubits, std::span<const size_t> qubits, Pauli p);
  /// Parses an optional sign prefix ("+", "-", "i", "-i", "+i") followed by
  /// one of "IXYZ_" per qubit, e.g. "-iXY_Z". The parsed value is taken in
  /// the canonical (Y-explicit) convention.
  static PauliString from_str(std::string_view text);

  size_t num_qubits() const { return x_.size(); }
  const BitVec &x_bits() const { return x_; }
  const BitVec &z_bits() const { return z_; }
  int phase_exp() const { return phase_exp_; }

  Pauli at(size_t qubit) const;
  size_t weight() const;
  size_t y_count() const { return x_.and_popcount(z_); }
  int canonical_phase() const;
  bool is_identity() const { return !x_.any() && !z_.any() && phase_exp_ == 0; }
  bool is_hermitian() const { return canonical_phase() % 2 == 0; }
  std::complex<double> phase() const { return i_pow(phase_exp_); }

  /// Same Pauli content, canonical phase forced to +1.
  PauliString unsigned_form() const;
  PauliString adjoint() const;
  PauliString scaled(int extra_phase_exp) const;

  PauliString &operator*=(const PauliString &rhs);
  friend PauliString operator*(PauliString lhs, const PauliString &rhs) { return lhs *= rhs; }

  friend bool operator==(const PauliString &, const PauliString &) = default;

  /// Canonical rendering, e.g. "+X_YZ", "-iY".
  std::string str() const;

 private:
  BitVec x_;
  BitVec z_;
  int phase_exp_ = 0;
};

/// Exact product p*q with phase. Throws std::invalid_argument on size mismatch.
PauliString mul(const PauliString &p, const PauliString &q);

/// Symplectic test: (p.x . q.z + p.z . q.x) mod 2 == 0.
bool commutes(const PauliString &p, const PauliString &q);

}  // namespace qet

#endif  // QET_PAULI_STRING_H_
