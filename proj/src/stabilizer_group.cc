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

#include "qet/stabilizer_group.h"

#include <stdexcept>
#include <string>

namespace qet {

namespace {

bool symplectic_bit(const PauliString &p, size_t column) {
  size_t n = p.num_qubits();
  return column < n ? p.x_bits().get(column) : p.z_bits().get(column - n);
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::vector<PauliString> generators)
    : num_qubits_(generators.empty() ? 0 : generators.front().num_qubits()),
      generators_(std::move(generators)) {
  if (num_qubits_ == 0 || generators_.size() != num_qubits_) {
    throw std::invalid_argument("stabilizer group needs exactly n generators on n qubits");
  }
  for (size_t i = 0; i < generators_.size(); ++i) {
    const PauliString &g = generators_[i];
    if (g.num_qubits() != num_qubits_) throw std::invalid_argument("generator size mismatch");
    if (!g.is_hermitian()) {
      throw std::invalid_argument("generator " + std::to_string(i) + " is not Hermitian");
    }
    for (size_t j = 0; j < i; ++j) {
      if (!commutes(g, generators_[j])) {
        throw std::invalid_argument("generators " + std::to_string(j) + " and " + std::to_string(i) +
                                    " anticommute");
      }
    }
  }

  std::vector<PauliString> work = generators_;
  size_t columns = 2 * num_qubits_;
  size_t next = 0;
  for (size_t col = 0; col < columns && next < work.size(); ++col) {
    size_t found = next;
    while (found < work.size() && !symplectic_bit(work[found], col)) ++found;
    if (found == work.size()) continue;
    std::swap(work[next], work[found]);
    for (size_t r = next + 1; r < work.size(); ++r) {
      if (symplectic_bit(work[r], col)) work[r] *= work[next];
    }
    pivots_.push_back(col);
    ++next;
  }
  if (next != num_qubits_) {
    throw std::invalid_argument("generators are dependent: rank " + std::to_string(next) + " < " +
                                std::to_string(num_qubits_));
  }
  work.resize(next);
  rows_ = std::move(work);
}

std::optional<int> StabilizerGroup::membership(const PauliString &p) const {
  if (p.num_qubits() != num_qubits_) {
    throw std::invalid_argument("membership: size mismatch " + std::to_string(p.num_qubits()) +
                                " vs " + std::to_string(num_qubits_));
  }
  if (!p.is_hermitian()) throw std::invalid_argument("membership: string " + p.str() + " is not Hermitian");

  BitVec x = p.x_bits();
  BitVec z = p.z_bits();
  PauliString product(num_qubits_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    size_t col = pivots_[r];
    bool bit = col < num_qubits_ ? x.get(col) : z.get(col - num_qubits_);
    if (!bit) continue;
    x ^= rows_[r].x_bits();
    z ^= rows_[r].z_bits();
    product *= rows_[r];
  }
  if (x.any() || z.any()) return std::nullopt;
  // product and p share Pauli content; product has expectation +1.
  int relative = ((p.canonical_phase() - product.canonical_phase()) % 4 + 4) % 4;
  return relative == 0 ? 1 : -1;
}

double StabilizerGroup::expectation(const PauliString &p) const {
  std::optional<int> sign = membership(p);
  return sign ? static_cast<double>(*sign) : 0.0;
}

Complex StabilizerGroup::expectation(const PauliPolynomial &a) const {
  if (a.num_qubits() != num_qubits_) throw std::invalid_argument("expectation: size mismatch");
  Complex total = 0.0;
  for (const auto &[key, coeff] : a.terms()) {
    // X^x Z^z = i^{-#Y} sigma with sigma Hermitian.
    PauliString sigma(key.first, key.second, 0);
    int canonical = sigma.canonical_phase();
    sigma = sigma.unsigned_form();
    std::optional<int> sign = membership(sigma);
    if (sign) total += coeff * i_pow(canonical) * static_cast<double>(*sign);
  }
  return total;
}

}  // namespace qet
