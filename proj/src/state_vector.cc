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

#include "qet/state_vector.h"

#include <bit>
#include <cmath>

namespace qet {

namespace {

constexpr size_t kMaxSpectrumQubits = 16;

void check_size(size_t a, size_t b) {
  if (a != b) {
    throw std::invalid_argument("state/operator size mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

void check_capacity(size_t num_qubits, size_t limit) {
  if (num_qubits > limit) {
    throw CapacityError("dense backend refused: " + std::to_string(num_qubits) +
                        " qubits exceeds the limit of " + std::to_string(limit));
  }
}

uint64_t low_word(const BitVec &bits) { return bits.num_words() ? bits.words()[0] : 0; }

// Adds coeff * X^x Z^z |s> into out.
void accumulate_term(uint64_t x, uint64_t z, Complex coeff, const StateVector &s, StateVector &out) {
  std::span<const Complex> in = s.amplitudes();
  std::span<Complex> dst = out.amplitudes();
  for (uint64_t b = 0; b < in.size(); ++b) {
    // Z^z |b> = (-1)^{z.b} |b>, then X^x |b> = |b ^ x>.
    double sign = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
    dst[b ^ x] += coeff * sign * in[b];
  }
}

}  // namespace

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
  check_capacity(num_qubits, kMaxQubits);
  if (num_qubits == 0) throw std::invalid_argument("StateVector needs at least one qubit");
  amplitudes_.assign(size_t{1} << num_qubits, 0.0);
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_capacity(num_qubits, kMaxQubits);
  if (amplitudes_.size() != (size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match 2^num_qubits");
  }
}

double StateVector::norm() const { return std::sqrt(inner(*this).real()); }

void StateVector::normalize() {
  double n = norm();
  if (n == 0) throw std::domain_error("cannot normalize the zero vector");
  *this *= 1.0 / n;
}

Complex StateVector::inner(const StateVector &other) const {
  check_size(num_qubits_, other.num_qubits_);
  Complex total = 0.0;
  for (size_t i = 0; i < amplitudes_.size(); ++i) total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return total;
}

StateVector &StateVector::operator+=(const StateVector &other) {
  check_size(num_qubits_, other.num_qubits_);
  for (size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
  return *this;
}

StateVector &StateVector::operator*=(Complex scale) {
  for (Complex &a : amplitudes_) a *= scale;
  return *this;
}

StateVector apply_pauli(const PauliString &p, const StateVector &s) {
  check_size(p.num_qubits(), s.num_qubits());
  StateVector out(s.num_qubits(), std::vector<Complex>(s.dimension(), 0.0));
  accumulate_term(low_word(p.x_bits()), low_word(p.z_bits()), p.phase(), s, out);
  return out;
}

StateVector apply_poly(const PauliPolynomial &a, const StateVector &s) {
  check_size(a.num_qubits(), s.num_qubits());
  StateVector out(s.num_qubits(), std::vector<Complex>(s.dimension(), 0.0));
  for (const auto &[key, coeff] : a.terms()) {
    accumulate_term(low_word(key.first), low_word(key.second), coeff, s, out);
  }
  return out;
}

Complex expectation_sv(const PauliPolynomial &a, const StateVector &s) {
  check_size(a.num_qubits(), s.num_qubits());
  std::span<const Complex> amp = s.amplitudes();
  Complex total = 0.0;
  for (const auto &[key, coeff] : a.terms()) {
    uint64_t x = low_word(key.first);
    uint64_t z = low_word(key.second);
    Complex term = 0.0;
    for (uint64_t b = 0; b < amp.size(); ++b) {
      double sign = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
      term += std::conj(amp[b ^ x]) * sign * amp[b];
    }
    total += coeff * term;
  }
  return total;
}

StateVector ground_state(const ToricLattice &lattice, int sector) {
  if (sector < 0 || sector >= kNumSectors) throw std::invalid_argument("sector must be in [0, 4)");
  StateVector state(lattice.num_qubits());
  // |0...0> is a +1 eigenstate of every plaquette and both Z loops. The
  // conjugate X loop i flips Z loop i only.
  for (size_t i = 0; i < 2; ++i) {
    if ((sector >> i) & 1) state = apply_pauli(lattice.wilson_x(i), state);
  }
  for (size_t v = 0; v + 1 < lattice.num_vertices(); ++v) {
    StateVector flipped = apply_pauli(lattice.star_operator(v), state);
    state += flipped;
  }
  state.normalize();
  return state;
}

Eigen::MatrixXcd dense_matrix(const PauliPolynomial &a, size_t max_qubits) {
  check_capacity(a.num_qubits(), max_qubits);
  size_t dim = size_t{1} << a.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &[key, coeff] : a.terms()) {
    uint64_t x = low_word(key.first);
    uint64_t z = low_word(key.second);
    for (uint64_t b = 0; b < dim; ++b) {
      double sign = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
      m(b ^ x, b) += coeff * sign;
    }
  }
  return m;
}

std::vector<double> hamiltonian_spectrum(const ToricLattice &lattice) {
  check_capacity(lattice.num_qubits(), kMaxSpectrumQubits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      dense_matrix(lattice.hamiltonian(), kMaxSpectrumQubits), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd &values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

size_t ground_space_dimension(const ToricLattice &lattice) {
  std::vector<double> spectrum = hamiltonian_spectrum(lattice);
  size_t count = 0;
  for (double e : spectrum) {
    if (e - spectrum.front() < 1e-9) ++count;
  }
  return count;
}

}  // namespace qet
