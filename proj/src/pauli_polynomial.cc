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

#include "qet/pauli_polynomial.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qet {

PauliPolynomial::PauliPolynomial(size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("PauliPolynomial needs at least one qubit");
}

PauliPolynomial::PauliPolynomial(const PauliString &p, Complex coeff) : num_qubits_(p.num_qubits()) {
  add_term(p, coeff);
}

PauliPolynomial PauliPolynomial::identity(size_t num_qubits, Complex coeff) {
  return PauliPolynomial(PauliString(num_qubits), coeff);
}

Complex PauliPolynomial::coefficient(const PauliString &p) const {
  if (p.num_qubits() != num_qubits_) throw std::invalid_argument("coefficient: size mismatch");
  auto it = terms_.find(Key{p.x_bits(), p.z_bits()});
  if (it == terms_.end()) return 0.0;
  // this holds c X^x Z^z and p = i^e X^x Z^z, so the weight of p is c / i^e.
  return it->second * i_pow(-p.phase_exp());
}

void PauliPolynomial::add_term(const PauliString &p, Complex coeff) {
  if (num_qubits_ == 0) num_qubits_ = p.num_qubits();
  if (p.num_qubits() != num_qubits_) {
    throw std::invalid_argument("add_term: size mismatch " + std::to_string(p.num_qubits()) +
                                " vs " + std::to_string(num_qubits_));
  }
  Key key{p.x_bits(), p.z_bits()};
  accumulate(key, coeff * p.phase());
  if (auto it = terms_.find(key); std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

void PauliPolynomial::accumulate(const Key &key, Complex coeff) {
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) it->second += coeff;
}

void PauliPolynomial::prune() {
  std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kPruneThreshold; });
}

void PauliPolynomial::check_size(const PauliPolynomial &other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("PauliPolynomial size mismatch: " + std::to_string(num_qubits_) +
                                " vs " + std::to_string(other.num_qubits_));
  }
}

PauliPolynomial &PauliPolynomial::operator+=(const PauliPolynomial &rhs) {
  check_size(rhs);
  for (const auto &[key, c] : rhs.terms_) accumulate(key, c);
  prune();
  return *this;
}

PauliPolynomial &PauliPolynomial::operator-=(const PauliPolynomial &rhs) {
  check_size(rhs);
  for (const auto &[key, c] : rhs.terms_) accumulate(key, -c);
  prune();
  return *this;
}

PauliPolynomial &PauliPolynomial::operator*=(Complex scale) {
  for (auto &kv : terms_) kv.second *= scale;
  prune();
  return *this;
}

PauliPolynomial operator*(const PauliPolynomial &a, const PauliPolynomial &b) {
  a.check_size(b);
  PauliPolynomial out(a.num_qubits_);
  for (const auto &[ka, ca] : a.terms_) {
    for (const auto &[kb, cb] : b.terms_) {
      // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}.
      double sign = (ka.second.and_popcount(kb.first) % 2) ? -1.0 : 1.0;
      out.accumulate(PauliPolynomial::Key{ka.first ^ kb.first, ka.second ^ kb.second}, sign * ca * cb);
    }
  }
  out.prune();
  return out;
}

double PauliPolynomial::distance(const PauliPolynomial &other) const {
  check_size(other);
  double worst = 0;
  for (const auto &[key, c] : terms_) {
    auto it = other.terms_.find(key);
    Complex d = it == other.terms_.end() ? c : c - it->second;
    worst = std::max(worst, std::abs(d));
  }
  for (const auto &[key, c] : other.terms_) {
    if (!terms_.contains(key)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

bool PauliPolynomial::is_hermitian() const { return approx_equal(poly_adjoint(*this)); }

std::string PauliPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  char buf[64];
  for (const auto &[key, c] : terms_) {
    // Render in the Y-explicit convention: X^x Z^z = i^{-#Y} sigma.
    PauliString p(key.first, key.second, 0);
    Complex w = c * i_pow(p.canonical_phase());
    std::snprintf(buf, sizeof(buf), "(%.6g%+.6gi)", w.real(), w.imag());
    if (!out.empty()) out += " + ";
    out += buf;
    out += p.unsigned_form().str().substr(1);
  }
  return out;
}

PauliPolynomial poly_add(const PauliPolynomial &a, const PauliPolynomial &b) { return a + b; }

PauliPolynomial poly_mul(const PauliPolynomial &a, const PauliPolynomial &b) { return a * b; }

PauliPolynomial poly_commutator(const PauliPolynomial &a, const PauliPolynomial &b) {
  return a * b - b * a;
}

PauliPolynomial poly_adjoint(const PauliPolynomial &a) {
  PauliPolynomial out(a.num_qubits());
  for (const auto &[key, c] : a.terms()) {
    // (c X^x Z^z)^dagger = conj(c) Z^z X^x = conj(c) (-1)^{x.z} X^x Z^z.
    double sign = (key.first.and_popcount(key.second) % 2) ? -1.0 : 1.0;
    out.add_term(PauliString(key.first, key.second, 0), sign * std::conj(c));
  }
  return out;
}

}  // namespace qet
