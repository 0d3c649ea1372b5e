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

#ifndef QET_STATE_VECTOR_H_
#define QET_STATE_VECTOR_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qet/pauli_polynomial.h"
#include "qet/pauli_string.h"
#include "qet/toric_lattice.h"

namespace qet {

/// Raised when a dense computation would exceed its memory guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense amplitudes over 2^n basis states. Qubit q is bit q of the basis
/// index. Values are not required to be normalized; operator application
/// returns unnormalized results.
class StateVector {
 public:
  static constexpr size_t kMaxQubits = 20;

  /// |0...0>. Throws CapacityError above kMaxQubits.
  explicit StateVector(size_t num_qubits);
  StateVector(size_t num_qubits, std::vector<Complex> amplitudes);

  size_t num_qubits() const { return num_qubits_; }
  size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  double norm() const;
  void normalize();
  /// <this|other>.
  Complex inner(const StateVector &other) const;

  StateVector &operator+=(const StateVector &other);
  StateVector &operator*=(Complex scale);

 private:
  size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

StateVector apply_pauli(const PauliString &p, const StateVector &s);
StateVector apply_poly(const PauliPolynomial &a, const StateVector &s);
/// <s|a|s> (no normalization applied).
Complex expectation_sv(const PauliPolynomial &a, const StateVector &s);

/// prod_v (I + A_v)/2 |0...0> over all stars but one, with conjugate X loops
/// applied first for sectors with flipped Z loops; normalized.
StateVector ground_state(const ToricLattice &lattice, int sector = 0);

/// Dense matrix of a polynomial in the qubit-q-is-bit-q basis.
Eigen::MatrixXcd dense_matrix(const PauliPolynomial &a, size_t max_qubits = 12);

/// Ascending eigenvalues of the dense toric Hamiltonian.
std::vector<double> hamiltonian_spectrum(const ToricLattice &lattice);

/// Multiplicity of the lowest eigenvalue (within 1e-9). Refuses lattices
/// with more than 16 qubits.
size_t ground_space_dimension(const ToricLattice &lattice);

}  // namespace qet

#endif  // QET_STATE_VECTOR_H_
