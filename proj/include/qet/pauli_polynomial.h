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

#ifndef QET_PAULI_POLYNOMIAL_H_
#define QET_PAULI_POLYNOMIAL_H_

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "qet/bitvec.h"
#include "qet/pauli_string.h"

namespace qet {

using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-12;

/// Sparse complex-weighted sum of Pauli strings.
///
/// Each term is keyed by its (x, z) bits and represents coeff * X^x Z^z; the
/// phase of any PauliString added to the polynomial is folded into its
/// coefficient. Terms iterate in a fixed (lexicographic) order.
class PauliPolynomial {
 public:
  using Key = std::pair<BitVec, BitVec>;
  using TermMap = std::map<Key, Complex>;

  PauliPolynomial() = default;
  /// The zero polynomial.
  explicit PauliPolynomial(size_t num_qubits);
  explicit PauliPolynomial(const PauliString &p, Complex coeff = 1.0);

  static PauliPolynomial identity(size_t num_qubits, Complex coeff = 1.0);

  size_t num_qubits() const { return num_qubits_; }
  size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap &terms() const { return terms_; }

  /// Coefficient c such that this polynomial contains c * p (p's phase is
  /// taken into account).
  Complex coefficient(const PauliString &p) const;

  void add_term(const PauliString &p, Complex coeff = 1.0);

  PauliPolynomial &operator+=(const PauliPolynomial &rhs);
  PauliPolynomial &operator-=(const PauliPolynomial &rhs);
  PauliPolynomial &operator*=(Complex scale);
  friend PauliPolynomial operator+(PauliPolynomial a, const PauliPolynomial &b) { return a += b; }
  friend PauliPolynomial operator-(PauliPolynomial a, const PauliPolynomial &b) { return a -= b; }
  friend PauliPolynomial operator*(PauliPolynomial a, Complex s) { return a *= s; }
  friend PauliPolynomial operator*(Complex s, PauliPolynomial a) { return a *= s; }
  friend PauliPolynomial operator*(const PauliPolynomial &a, const PauliPolynomial &b);

  /// Largest coefficient magnitude of (this - other).
  double distance(const PauliPolynomial &other) const;
  bool approx_equal(const PauliPolynomial &other, double tolerance = 1e-12) const {
    return distance(other) <= tolerance;
  }

  /// True when every term is a Hermitian operator with real weight, i.e.
  /// the polynomial equals its adjoint to within the prune threshold.
  bool is_hermitian() const;

  std::string str() const;

 private:
  void check_size(const PauliPolynomial &other) const;
  void accumulate(const Key &key, Complex coeff);
  void prune();

  size_t num_qubits_ = 0;
  TermMap terms_;
};

PauliPolynomial poly_add(const PauliPolynomial &a, const PauliPolynomial &b);
PauliPolynomial poly_mul(const PauliPolynomial &a, const PauliPolynomial &b);
/// ab - ba.
PauliPolynomial poly_commutator(const PauliPolynomial &a, const PauliPolynomial &b);
PauliPolynomial poly_adjoint(const PauliPolynomial &a);

}  // namespace qet

#endif  // QET_PAULI_POLYNOMIAL_H_
