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

#ifndef QET_STABILIZER_GROUP_H_
#define QET_STABILIZER_GROUP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qet/pauli_polynomial.h"
#include "qet/pauli_string.h"

namespace qet {

/// A pure stabilizer state, given by n independent commuting Hermitian
/// generators on n qubits. Each generator g satisfies g|psi> = |psi>, so a
/// generator's sign is part of the state.
///
/// Construction runs Gaussian elimination once over the symplectic rows
/// (x bits then z bits) and keeps the reduced rows as actual Pauli products
/// of the generators. Membership queries reduce the query vector against
/// those rows and replay the Pauli product of the rows they used, so the
/// sign comes from real multiplication phases.
class StabilizerGroup {
 public:
  /// Throws std::invalid_argument if the generators are the wrong count,
  /// non-Hermitian, non-commuting, or dependent.
  explicit StabilizerGroup(std::vector<PauliString> generators);

  size_t num_qubits() const { return num_qubits_; }
  std::span<const PauliString> generators() const { return generators_; }

  /// nullopt if p (up to sign) is not in the group, else the sign s with
  /// s * p in the group. p must be Hermitian.
  std::optional<int> membership(const PauliString &p) const;

  /// <psi|p|psi>: the membership sign, or 0 for strings outside the group.
  double expectation(const PauliString &p) const;

  /// Linear extension of expectation() to polynomials. Non-Hermitian terms
  /// of X^x Z^z form are handled through their tracked phase.
  Complex expectation(const PauliPolynomial &a) const;

 private:
  size_t num_qubits_;
  std::vector<PauliString> generators_;
  // Echelon rows, each a product of generators, with pivot column indices
  // into the 2n-wide symplectic vector.
  std::vector<PauliString> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace qet

#endif  // QET_STABILIZER_GROUP_H_
